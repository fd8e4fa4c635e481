//! Exponentials and the internal hom `[B, A]` for the composition tensor
//! product, computed fiberwise.
//!
//! A fiber element of `[B, A]` at arity `n` assigns to every length-`n` word
//! over `B` an element of `A` whose arity is the sum of the letter arities.
//! Fibers are enumerated per arity on demand; the full `[B, A]` is never
//! materialized beyond a caller-supplied bound.

use std::collections::BTreeMap;

use crate::graded::{word_str, Elem, GradedError, GradedMap, GradedSet};
use crate::tensor::tensor;

/// A single element of the internal hom fiber `[B, A]_n`: a total assignment
/// table from length-`n` words over `B` to elements of `A`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HomElem {
    pub arity: usize,
    pub table: BTreeMap<Vec<Elem>, Elem>,
}

impl HomElem {
    pub fn apply(&self, word: &[Elem]) -> Result<&Elem, GradedError> {
        self.table
            .get(word)
            .ok_or_else(|| GradedError::MissingAssignment(word_str(word)))
    }

    /// Canonical serialization; doubles as the element id when `[B, A]` is
    /// viewed as a graded set.
    pub fn canonical_string(&self) -> String {
        let parts: Vec<String> = self
            .table
            .iter()
            .map(|(w, e)| format!("{}->{}", word_str(w), e))
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// The exponential fiber at `n`: all functions from the `n`-ary elements of
/// `B` to the `n`-ary elements of `A`.
pub fn exponential_fiber(a: &GradedSet, b: &GradedSet, n: usize) -> Vec<BTreeMap<Elem, Elem>> {
    let domain = b.fiber(n);
    let codomain = a.fiber(n);
    let mut out: Vec<BTreeMap<Elem, Elem>> = vec![BTreeMap::new()];
    for d in domain {
        let mut next = Vec::with_capacity(out.len() * codomain.len());
        for partial in &out {
            for c in &codomain {
                let mut m = partial.clone();
                m.insert(d.clone(), (*c).clone());
                next.push(m);
            }
        }
        out = next;
    }
    out
}

/// Enumerate the internal hom fiber `[B, A]_n`.
pub fn hom_fiber(b: &GradedSet, a: &GradedSet, n: usize) -> Vec<HomElem> {
    let words = b.words(n);
    let mut tables: Vec<BTreeMap<Vec<Elem>, Elem>> = vec![BTreeMap::new()];
    for w in &words {
        let sum = b.word_arity(w).expect("letters from b");
        let candidates = a.fiber(sum);
        let mut next = Vec::with_capacity(tables.len() * candidates.len());
        for partial in &tables {
            for c in &candidates {
                let mut m = partial.clone();
                m.insert(w.clone(), (*c).clone());
                next.push(m);
            }
        }
        tables = next;
    }
    tables.into_iter().map(|table| HomElem { arity: n, table }).collect()
}

/// The predicted fiber cardinality: a product over words of the number of
/// arity-matching targets.
pub fn hom_fiber_size(b: &GradedSet, a: &GradedSet, n: usize) -> usize {
    b.words(n)
        .iter()
        .map(|w| a.fiber(b.word_arity(w).expect("letters from b")).len())
        .product()
}

/// Materialize `[B, A]` as a graded set up to `max_arity`, with a dictionary
/// from the generated element ids back to the tables.
pub fn hom_graded_set(
    b: &GradedSet,
    a: &GradedSet,
    max_arity: usize,
) -> (GradedSet, BTreeMap<Elem, HomElem>) {
    let mut pairs = Vec::new();
    let mut dict = BTreeMap::new();
    for n in 0..=max_arity {
        for h in hom_fiber(b, a, n) {
            let id = Elem::atom(h.canonical_string());
            pairs.push((id.clone(), n));
            dict.insert(id, h);
        }
    }
    let set = GradedSet::new(pairs).expect("canonical ids are distinct per arity");
    (set, dict)
}

/// Curry a map `F : A □ B -> C` into an assignment `A -> [B, C]`: the element
/// over `a` is the table sending each word fitting the arity of `a` to
/// `F(a, w)`.
pub fn curry(
    a: &GradedSet,
    b: &GradedSet,
    f: &GradedMap,
) -> Result<BTreeMap<Elem, HomElem>, GradedError> {
    let mut out = BTreeMap::new();
    for (x, n) in a.elements() {
        let mut table = BTreeMap::new();
        for w in b.words(n) {
            let value = f.apply(&Elem::pair(x.clone(), w.clone()))?.clone();
            table.insert(w, value);
        }
        out.insert(x.clone(), HomElem { arity: n, table });
    }
    Ok(out)
}

/// Rebuild a map `A □ B -> C` from an assignment `A -> [B, C]`.
pub fn uncurry(
    a: &GradedSet,
    b: &GradedSet,
    c: &GradedSet,
    assignment: &BTreeMap<Elem, HomElem>,
) -> Result<GradedMap, GradedError> {
    let source = tensor(a, b);
    let mut map = BTreeMap::new();
    for (e, _) in source.elements() {
        let Elem::Pair(head, body) = e else {
            return Err(GradedError::Structure(format!("not a tensor element: {e}")));
        };
        let h = assignment
            .get(head)
            .ok_or_else(|| GradedError::MissingAssignment(head.to_string()))?;
        map.insert(e.clone(), h.apply(body)?.clone());
    }
    GradedMap::new(source, c.clone(), map)
}

/// The evaluation map `[B, C] □ B -> C` (the counit of the adjunction),
/// with `[B, C]` materialized up to `max_arity`.
pub fn evaluation(
    b: &GradedSet,
    c: &GradedSet,
    max_arity: usize,
) -> Result<GradedMap, GradedError> {
    let (hom, dict) = hom_graded_set(b, c, max_arity);
    let source = tensor(&hom, b);
    let mut map = BTreeMap::new();
    for (e, _) in source.elements() {
        let Elem::Pair(head, body) = e else {
            return Err(GradedError::Structure(format!("not a tensor element: {e}")));
        };
        let h = &dict[head.as_ref()];
        map.insert(e.clone(), h.apply(body)?.clone());
    }
    GradedMap::new(source, c.clone(), map)
}

/// All graded maps from `x` to `y`, in canonical order.
pub fn enumerate_graded_maps(x: &GradedSet, y: &GradedSet) -> Vec<GradedMap> {
    let mut assignments: Vec<BTreeMap<Elem, Elem>> = vec![BTreeMap::new()];
    for (e, n) in x.elements() {
        let candidates = y.fiber(n);
        let mut next = Vec::with_capacity(assignments.len() * candidates.len());
        for partial in &assignments {
            for c in &candidates {
                let mut m = partial.clone();
                m.insert(e.clone(), (*c).clone());
                next.push(m);
            }
        }
        assignments = next;
    }
    assignments
        .into_iter()
        .map(|m| GradedMap::new(x.clone(), y.clone(), m).expect("arities match by construction"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_fiber_counts() {
        let a = GradedSet::from_atoms(&[("p", 1), ("q", 1)]);
        let b = GradedSet::from_atoms(&[("u", 1), ("v", 1)]);
        assert_eq!(exponential_fiber(&a, &b, 1).len(), 4);
        assert_eq!(exponential_fiber(&a, &b, 0).len(), 1);
        let ident = exponential_fiber(&a, &a, 1);
        assert!(ident.iter().any(|m| m.iter().all(|(k, v)| k == v)));
    }

    #[test]
    fn hom_fiber_single_choice() {
        // B = {u:1}, A = {p:2}, n = 2: one word uu with arity sum 2
        let b = GradedSet::from_atoms(&[("u", 1)]);
        let a = GradedSet::from_atoms(&[("p", 2)]);
        let fiber = hom_fiber(&b, &a, 2);
        assert_eq!(fiber.len(), 1);
        assert_eq!(fiber.len(), hom_fiber_size(&b, &a, 2));
    }

    #[test]
    fn hom_fiber_degree_zero_matches_set_maps() {
        // two degree-0 elements on both sides, n = 1: |Set(B, A)| = 4
        let a = GradedSet::from_atoms(&[("x", 0), ("y", 0)]);
        let fiber = hom_fiber(&a, &a, 1);
        assert_eq!(fiber.len(), 4);
    }

    #[test]
    fn hom_fiber_empty_word_case() {
        let a = GradedSet::from_atoms(&[("x", 0), ("p", 2)]);
        let b = GradedSet::from_atoms(&[("u", 1)]);
        let fiber = hom_fiber(&b, &a, 0);
        // one empty word; targets are the arity-0 elements
        assert_eq!(fiber.len(), 1);
        assert_eq!(fiber[0].table[&Vec::new()], Elem::atom("x"));
    }

    #[test]
    fn curry_of_left_unitor_is_identity_table() {
        let x = GradedSet::from_atoms(&[("u", 1), ("v", 0)]);
        let (lam, _) = crate::tensor::left_unitor(&x).unwrap();
        let unit = GradedSet::unit();
        let assignment = curry(&unit, &x, &lam).unwrap();
        let star = assignment.get(&Elem::star()).unwrap();
        assert_eq!(star.arity, 1);
        for (w, v) in &star.table {
            assert_eq!(w.as_slice(), std::slice::from_ref(v));
        }
    }

    #[test]
    fn evaluation_is_uncurried_identity() {
        let b = GradedSet::from_atoms(&[("u", 0)]);
        let c = GradedSet::from_atoms(&[("p", 0), ("q", 0)]);
        let max = 1;
        let (hom, dict) = hom_graded_set(&b, &c, max);
        let identity_assignment: BTreeMap<Elem, HomElem> =
            hom.elements().map(|(e, _)| (e.clone(), dict[e].clone())).collect();
        let ev = evaluation(&b, &c, max).unwrap();
        let unc = uncurry(&hom, &b, &c, &identity_assignment).unwrap();
        assert_eq!(ev, unc);
    }
}
