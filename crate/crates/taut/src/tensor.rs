//! The composition tensor product on graded sets, with its coherence maps.
//!
//! An element of `X □ Y` is a pair `(a, ψ)`: an element of `X` together with
//! a word over `Y` whose length is the arity of `a`. The arity of the pair is
//! the sum of the arities of the letters of `ψ`.

use std::collections::BTreeMap;

use crate::graded::{Elem, GradedError, GradedMap, GradedSet};

pub fn tensor(x: &GradedSet, y: &GradedSet) -> GradedSet {
    let mut pairs = BTreeMap::new();
    for (a, n) in x.elements() {
        for word in y.words(n) {
            let arity = y.word_arity(&word).expect("letters drawn from y");
            pairs.insert(Elem::pair(a.clone(), word), arity);
        }
    }
    GradedSet::new(pairs).expect("tensor elements are distinct")
}

fn split_pair(e: &Elem) -> Result<(&Elem, &[Elem]), GradedError> {
    match e {
        Elem::Pair(h, body) => Ok((h, body)),
        Elem::Atom(_) => Err(GradedError::Structure(format!(
            "expected a tensor element, got {e}"
        ))),
    }
}

/// The associator `X □ (Y □ Z) -> (X □ Y) □ Z`: regroup `(a, [(y_i, φ_i)])`
/// as `((a, [y_i]), φ_1 ++ ... ++ φ_n)`.
pub fn associator(
    x: &GradedSet,
    y: &GradedSet,
    z: &GradedSet,
) -> Result<GradedMap, GradedError> {
    let yz = tensor(y, z);
    let source = tensor(x, &yz);
    let xy = tensor(x, y);
    let target = tensor(&xy, z);
    let mut map = BTreeMap::new();
    for (e, _) in source.elements() {
        let (a, body) = split_pair(e)?;
        let mut heads = Vec::with_capacity(body.len());
        let mut tail = Vec::new();
        for letter in body {
            let (yi, phi) = split_pair(letter)?;
            heads.push(yi.clone());
            tail.extend(phi.iter().cloned());
        }
        map.insert(e.clone(), Elem::pair(Elem::pair(a.clone(), heads), tail));
    }
    GradedMap::new(source, target, map)
}

pub fn associator_inverse(
    x: &GradedSet,
    y: &GradedSet,
    z: &GradedSet,
) -> Result<GradedMap, GradedError> {
    associator(x, y, z)?.inverse()
}

/// Right unitor `ρ_X : X □ {*} -> X` (first projection) and its inverse,
/// which couples each element with its arity.
pub fn right_unitor(x: &GradedSet) -> Result<(GradedMap, GradedMap), GradedError> {
    let unit = GradedSet::unit();
    let source = tensor(x, &unit);
    let mut fwd = BTreeMap::new();
    let mut bwd = BTreeMap::new();
    for (e, _) in source.elements() {
        let (a, _) = split_pair(e)?;
        fwd.insert(e.clone(), a.clone());
        bwd.insert(a.clone(), e.clone());
    }
    Ok((
        GradedMap::new(source.clone(), x.clone(), fwd)?,
        GradedMap::new(x.clone(), source, bwd)?,
    ))
}

/// Left unitor `λ_X : {*} □ X -> X` (second projection on the length-one
/// word) and its inverse.
pub fn left_unitor(x: &GradedSet) -> Result<(GradedMap, GradedMap), GradedError> {
    let unit = GradedSet::unit();
    let source = tensor(&unit, x);
    let mut fwd = BTreeMap::new();
    let mut bwd = BTreeMap::new();
    for (e, _) in source.elements() {
        let (_, body) = split_pair(e)?;
        let [u] = body else {
            return Err(GradedError::Structure(format!(
                "unit tensor element with word length {}",
                body.len()
            )));
        };
        fwd.insert(e.clone(), u.clone());
        bwd.insert(u.clone(), e.clone());
    }
    Ok((
        GradedMap::new(source.clone(), x.clone(), fwd)?,
        GradedMap::new(x.clone(), source, bwd)?,
    ))
}

/// Functorial action of `□` on a pair of maps.
pub fn tensor_map(f: &GradedMap, g: &GradedMap) -> Result<GradedMap, GradedError> {
    let source = tensor(&f.source, &g.source);
    let target = tensor(&f.target, &g.target);
    let mut map = BTreeMap::new();
    for (e, _) in source.elements() {
        let (a, body) = split_pair(e)?;
        let head = f.apply(a)?.clone();
        let word = body
            .iter()
            .map(|l| g.apply(l).cloned())
            .collect::<Result<Vec<_>, _>>()?;
        map.insert(e.clone(), Elem::pair(head, word));
    }
    GradedMap::new(source, target, map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_cardinality() {
        // X = {a:2, b:0}, Y = {u:1, v:0}: 2^2 + 2^0 = 5 elements
        let x = GradedSet::from_atoms(&[("a", 2), ("b", 0)]);
        let y = GradedSet::from_atoms(&[("u", 1), ("v", 0)]);
        let t = tensor(&x, &y);
        assert_eq!(t.len(), 5);
        let e = Elem::pair(Elem::atom("a"), vec![Elem::atom("u"), Elem::atom("v")]);
        assert_eq!(t.arity(&e).unwrap(), 1);
    }

    #[test]
    fn tensor_with_unit_has_carrier_size() {
        let x = GradedSet::from_atoms(&[("a", 2), ("b", 0), ("c", 1)]);
        assert_eq!(tensor(&x, &GradedSet::unit()).len(), x.len());
        assert_eq!(tensor(&GradedSet::unit(), &x).len(), x.len());
    }

    #[test]
    fn unitors_are_mutually_inverse() {
        let x = GradedSet::from_atoms(&[("a", 2), ("b", 0), ("c", 1)]);
        let (rho, rho_inv) = right_unitor(&x).unwrap();
        let (lam, lam_inv) = left_unitor(&x).unwrap();
        assert_eq!(rho.compose(&rho_inv).unwrap(), GradedMap::identity(&x));
        assert_eq!(rho_inv.compose(&rho).unwrap(), GradedMap::identity(&rho.source));
        assert_eq!(lam.compose(&lam_inv).unwrap(), GradedMap::identity(&x));
        assert_eq!(lam_inv.compose(&lam).unwrap(), GradedMap::identity(&lam.source));
    }

    #[test]
    fn associator_is_arity_preserving_bijection() {
        let x = GradedSet::from_atoms(&[("a", 1)]);
        let y = GradedSet::from_atoms(&[("u", 2)]);
        let z = GradedSet::from_atoms(&[("p", 0), ("q", 0)]);
        let alpha = associator(&x, &y, &z).unwrap();
        assert_eq!(alpha.source.len(), 4);
        assert_eq!(alpha.target.len(), 4);
        assert!(alpha.is_bijective());
        for (e, img) in alpha.entries() {
            assert_eq!(
                alpha.source.arity(e).unwrap(),
                alpha.target.arity(img).unwrap()
            );
        }
    }
}
