//! Complete multipartite and Kneser graphs, both planned through matchings.

use super::{generate, plan_dominating, FamilyDecision, FamilySpec};
use crate::ecc2::{ecc2_decide, plan_from_matching, Ecc2Witness};
use crate::error::{precondition, Error};
use crate::game::Plan;

/// Closed form: a vertex in a part of size `a` is a stackable target iff
/// `2a <= n + 1`.
pub fn multipartite_decide(parts: &[usize], part: usize) -> Result<bool, Error> {
    if parts.len() < 2 || parts.contains(&0) {
        return Err(precondition("need at least two nonempty parts"));
    }
    let a = *parts.get(part).ok_or_else(|| precondition(format!("no part {part}")))?;
    let n: usize = parts.iter().sum();
    Ok(2 * a <= n + 1)
}

/// A plan onto vertex `r`, or `None` when the target is not stackable.
/// The closed form is cross-checked against the matching decision.
pub fn multipartite_plan(parts: &[usize], r: usize) -> Result<Option<Plan>, Error> {
    let family = generate(&FamilySpec::Multipartite { parts: parts.to_vec() })?;
    let g = &family.graph;
    if r >= g.n() {
        return Err(precondition(format!("target {r} out of range")));
    }
    let mut part = 0;
    let mut start = 0;
    while r >= start + parts[part] {
        start += parts[part];
        part += 1;
    }
    let closed = multipartite_decide(parts, part)?;
    if parts[part] == 1 {
        return Ok(Some(plan_dominating(g, r)?));
    }
    let w = ecc2_decide(g, r)?;
    if w.decision != closed {
        return Err(precondition(format!("matching decision {} disagrees with the closed form", w.decision)));
    }
    match &w.matching {
        Some(m) => Ok(Some(plan_from_matching(g, r, m)?)),
        None => Ok(None),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KneserReport {
    /// `m >= 3k - 1 >= 5` fails, so the graph need not have diameter two.
    Open { m: usize, k: usize },
    /// The graph is vertex-transitive, so target 0 decides every target.
    Decided { stackable: bool, witness: Ecc2Witness },
}

fn in_range(m: usize, k: usize) -> bool {
    3 * k >= 6 && m + 1 >= 3 * k
}

pub fn kneser_stackable(m: usize, k: usize) -> Result<KneserReport, Error> {
    if !in_range(m, k) {
        return Ok(KneserReport::Open { m, k });
    }
    let g = generate(&FamilySpec::Kneser { m, k })?.graph;
    let d = g.diameter();
    if d != 2 {
        return Err(precondition(format!("K({m},{k}) has diameter {d}")));
    }
    let witness = ecc2_decide(&g, 0)?;
    Ok(KneserReport::Decided { stackable: witness.decision, witness })
}

pub fn kneser_plan(m: usize, k: usize, r: usize) -> Result<FamilyDecision, Error> {
    if !in_range(m, k) {
        return Ok(FamilyDecision::Open(format!("K({m},{k}) lies outside m >= 3k - 1 >= 5")));
    }
    let g = generate(&FamilySpec::Kneser { m, k })?.graph;
    let w = ecc2_decide(&g, r)?;
    Ok(match w.matching {
        Some(mt) => FamilyDecision::Stackable(plan_from_matching(&g, r, &mt)?),
        None => FamilyDecision::NotStackable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::verify_plan;

    #[test]
    fn closed_form() {
        assert!(multipartite_decide(&[3, 3], 0).unwrap());
        assert!(!multipartite_decide(&[4, 2], 0).unwrap());
        assert!(multipartite_decide(&[4, 2], 1).unwrap());
        assert!(multipartite_decide(&[2, 2, 3], 2).unwrap());
    }

    #[test]
    fn plans_verify() {
        for parts in [vec![3, 3], vec![4, 2], vec![2, 2, 3], vec![1, 5]] {
            let g = generate(&FamilySpec::Multipartite { parts: parts.clone() }).unwrap().graph;
            for r in 0..g.n() {
                if let Some(p) = multipartite_plan(&parts, r).unwrap() {
                    assert!(verify_plan(&g, &p).is_accept());
                }
            }
        }
        assert!(multipartite_plan(&[4, 2], 0).unwrap().is_none());
    }

    #[test]
    fn kneser_cases() {
        assert!(matches!(kneser_stackable(5, 2).unwrap(), KneserReport::Decided { stackable: true, .. }));
        assert!(matches!(kneser_stackable(7, 3).unwrap(), KneserReport::Open { m: 7, k: 3 }));
        assert!(matches!(kneser_plan(7, 3, 0).unwrap(), FamilyDecision::Open(_)));
        match kneser_plan(5, 2, 4).unwrap() {
            FamilyDecision::Stackable(p) => {
                let g = generate(&FamilySpec::Petersen).unwrap().graph;
                assert!(verify_plan(&g, &p).is_accept());
            }
            other => panic!("{other:?}"),
        }
    }
}
