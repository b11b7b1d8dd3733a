use anyhow::{bail, Result};
use serde_json::{json, Value};

use cupstack::ecc2::{ecc2_decide, plan_from_matching};
use cupstack::families::{self, plan_dominating, FamilyDecision, LabelFile};
use cupstack::oracle::{self, Budget, Outcome};
use cupstack::{Configuration, Graph, Plan};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Auto,
    Oracle,
    Ecc2,
    Family,
}

#[derive(Debug)]
pub struct Solution {
    pub method: &'static str,
    pub target: usize,
    /// `None` when the method could not decide.
    pub stackable: Option<bool>,
    pub plan: Option<Plan>,
    pub witness: Option<Vec<(usize, usize)>>,
    pub explored: Option<u64>,
    pub note: Option<String>,
}

impl Solution {
    fn new(method: &'static str, target: usize, stackable: Option<bool>) -> Self {
        Solution { method, target, stackable, plan: None, witness: None, explored: None, note: None }
    }

    pub fn to_json(&self, with_plan: bool) -> Value {
        let mut v = json!({"target": self.target, "stackable": self.stackable, "method": self.method});
        if let Some(w) = &self.witness {
            v["matching"] = json!(w);
        }
        if let Some(e) = self.explored {
            v["explored"] = json!(e);
        }
        if let Some(n) = &self.note {
            v["note"] = json!(n);
        }
        if with_plan {
            if let Some(p) = &self.plan {
                v["plan"] = serde_json::to_value(p).unwrap();
            }
        }
        v
    }
}

pub fn solve(
    g: &Graph,
    sidecar: Option<&LabelFile>,
    r: usize,
    method: Method,
    budget: Budget,
    want_plan: bool,
) -> Result<Solution> {
    let ecc = g.eccentricity(r);
    match method {
        Method::Oracle => Ok(by_oracle(g, r, budget)),
        Method::Ecc2 => by_ecc2(g, r, ecc, want_plan),
        Method::Family => {
            let Some(side) = sidecar else { bail!("no label sidecar next to the graph file") };
            match by_family(g, side, r)? {
                Some(sol) => Ok(sol),
                None => bail!("the {} planner has nothing for target {r}", side.spec.name()),
            }
        }
        Method::Auto => {
            if ecc <= 2 {
                return by_ecc2(g, r, ecc, want_plan);
            }
            if let Some(side) = sidecar {
                if let Some(sol) = by_family(g, side, r)? {
                    return Ok(sol);
                }
            }
            Ok(by_oracle(g, r, budget))
        }
    }
}

fn by_oracle(g: &Graph, r: usize, budget: Budget) -> Solution {
    let outcome = oracle::decide(g, &Configuration::ones(g.n()), r, budget);
    let mut sol = Solution::new("oracle", r, outcome.decision());
    match outcome {
        Outcome::Stackable(p) => sol.plan = Some(p),
        Outcome::NotStackable => {}
        Outcome::Inconclusive { explored } => sol.explored = Some(explored),
    }
    sol
}

fn by_ecc2(g: &Graph, r: usize, ecc: usize, want_plan: bool) -> Result<Solution> {
    if ecc <= 1 {
        let mut sol = Solution::new("dominating", r, Some(true));
        sol.plan = Some(plan_dominating(g, r)?);
        return Ok(sol);
    }
    if ecc != 2 {
        bail!("target {r} has eccentricity {ecc}; the matching method needs 2");
    }
    let w = ecc2_decide(g, r)?;
    let mut sol = Solution::new("ecc2", r, Some(w.decision));
    if let Some(m) = &w.matching {
        sol.witness = Some(m.edges());
        if want_plan {
            sol.plan = Some(plan_from_matching(g, r, m)?);
        }
    }
    Ok(sol)
}

/// `None` when the family planner has no answer for this target.
fn by_family(g: &Graph, side: &LabelFile, r: usize) -> Result<Option<Solution>> {
    let fam = families::generate(&side.spec)?;
    if fam.graph != *g {
        bail!("graph does not match its sidecar family {}", side.spec.name());
    }
    Ok(match families::plan_for(&fam, r)? {
        FamilyDecision::Stackable(p) => {
            let mut sol = Solution::new("family", r, Some(true));
            sol.plan = Some(p);
            Some(sol)
        }
        FamilyDecision::NotStackable => Some(Solution::new("family", r, Some(false))),
        FamilyDecision::Open(why) => {
            let mut sol = Solution::new("family", r, None);
            sol.note = Some(why);
            Some(sol)
        }
        FamilyDecision::Unsupported(_) => None,
    })
}
