//! Graded sets: finite carriers with an arity function into the naturals.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GradedError {
    #[error("element {0} is not in the carrier")]
    UnknownElement(String),
    #[error("no assignment for element {0}")]
    MissingAssignment(String),
    #[error("map does not preserve arity at {elem}: {src} -> {dst}")]
    NotArityPreserving { elem: String, src: usize, dst: usize },
    #[error("duplicate element {0}")]
    Duplicate(String),
    #[error("{0}")]
    Structure(String),
}

/// An element of a graded set. Elements built by the composition tensor
/// product keep their pair structure so coherence maps can reassociate them
/// without external bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Elem {
    Atom(String),
    /// A tensor element: a head together with a word fitting its arity.
    Pair(Box<Elem>, Vec<Elem>),
}

impl Elem {
    pub fn atom(s: impl Into<String>) -> Elem {
        Elem::Atom(s.into())
    }

    pub fn pair(head: Elem, body: Vec<Elem>) -> Elem {
        Elem::Pair(Box::new(head), body)
    }

    pub fn star() -> Elem {
        Elem::Atom("*".into())
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Atom(s) => write!(f, "{s}"),
            Elem::Pair(h, body) => {
                write!(f, "({h};")?;
                for (i, b) in body.iter().enumerate() {
                    write!(f, "{}{b}", if i == 0 { "" } else { " " })?;
                }
                write!(f, ")")
            }
        }
    }
}

pub fn word_str(word: &[Elem]) -> String {
    let parts: Vec<String> = word.iter().map(|e| e.to_string()).collect();
    format!("[{}]", parts.join(" "))
}

/// A finite set with an arity for every element, ordered canonically.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedSet {
    arity: BTreeMap<Elem, usize>,
}

impl GradedSet {
    pub fn new(pairs: impl IntoIterator<Item = (Elem, usize)>) -> Result<GradedSet, GradedError> {
        let mut arity = BTreeMap::new();
        for (e, n) in pairs {
            if arity.insert(e.clone(), n).is_some() {
                return Err(GradedError::Duplicate(e.to_string()));
            }
        }
        Ok(GradedSet { arity })
    }

    pub fn from_atoms(pairs: &[(&str, usize)]) -> GradedSet {
        GradedSet {
            arity: pairs.iter().map(|(s, n)| (Elem::atom(*s), *n)).collect(),
        }
    }

    /// The monoidal unit: a single element of arity 1.
    pub fn unit() -> GradedSet {
        GradedSet { arity: [(Elem::star(), 1)].into_iter().collect() }
    }

    pub fn len(&self) -> usize {
        self.arity.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arity.is_empty()
    }

    pub fn contains(&self, e: &Elem) -> bool {
        self.arity.contains_key(e)
    }

    pub fn arity(&self, e: &Elem) -> Result<usize, GradedError> {
        self.arity
            .get(e)
            .copied()
            .ok_or_else(|| GradedError::UnknownElement(e.to_string()))
    }

    /// Elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = (&Elem, usize)> {
        self.arity.iter().map(|(e, &n)| (e, n))
    }

    /// The fiber over `n`, in canonical order.
    pub fn fiber(&self, n: usize) -> Vec<&Elem> {
        self.arity.iter().filter(|(_, &a)| a == n).map(|(e, _)| e).collect()
    }

    pub fn max_arity(&self) -> usize {
        self.arity.values().copied().max().unwrap_or(0)
    }

    /// Is the arity map the constant-zero map?
    pub fn concentrated_in_degree_zero(&self) -> bool {
        self.arity.values().all(|&a| a == 0)
    }

    /// All words of the given length, lexicographic in the carrier order.
    pub fn words(&self, len: usize) -> Vec<Vec<Elem>> {
        let letters: Vec<&Elem> = self.arity.keys().collect();
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            let mut next = Vec::with_capacity(out.len() * letters.len());
            for w in &out {
                for &l in &letters {
                    let mut v = w.clone();
                    v.push(l.clone());
                    next.push(v);
                }
            }
            out = next;
        }
        out
    }

    pub fn word_arity(&self, word: &[Elem]) -> Result<usize, GradedError> {
        word.iter().try_fold(0usize, |acc, e| Ok(acc + self.arity(e)?))
    }
}

/// An arity-preserving function between graded sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMap {
    pub source: GradedSet,
    pub target: GradedSet,
    map: BTreeMap<Elem, Elem>,
}

impl GradedMap {
    pub fn new(
        source: GradedSet,
        target: GradedSet,
        map: BTreeMap<Elem, Elem>,
    ) -> Result<GradedMap, GradedError> {
        for (e, n) in source.elements() {
            let img = map
                .get(e)
                .ok_or_else(|| GradedError::MissingAssignment(e.to_string()))?;
            let m = target.arity(img)?;
            if m != n {
                return Err(GradedError::NotArityPreserving {
                    elem: e.to_string(),
                    src: n,
                    dst: m,
                });
            }
        }
        for e in map.keys() {
            if !source.contains(e) {
                return Err(GradedError::UnknownElement(e.to_string()));
            }
        }
        Ok(GradedMap { source, target, map })
    }

    pub fn identity(x: &GradedSet) -> GradedMap {
        GradedMap {
            source: x.clone(),
            target: x.clone(),
            map: x.elements().map(|(e, _)| (e.clone(), e.clone())).collect(),
        }
    }

    pub fn apply(&self, e: &Elem) -> Result<&Elem, GradedError> {
        self.map
            .get(e)
            .ok_or_else(|| GradedError::MissingAssignment(e.to_string()))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Elem, &Elem)> {
        self.map.iter()
    }

    /// `self` after `other` (other's target must be this source).
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap, GradedError> {
        if other.target != self.source {
            return Err(GradedError::Structure(
                "composition endpoints do not match".into(),
            ));
        }
        let map = other
            .map
            .iter()
            .map(|(e, v)| Ok((e.clone(), self.apply(v)?.clone())))
            .collect::<Result<_, GradedError>>()?;
        GradedMap::new(other.source.clone(), self.target.clone(), map)
    }

    pub fn is_bijective(&self) -> bool {
        let images: std::collections::BTreeSet<&Elem> = self.map.values().collect();
        images.len() == self.source.len() && images.len() == self.target.len()
    }

    pub fn inverse(&self) -> Result<GradedMap, GradedError> {
        if !self.is_bijective() {
            return Err(GradedError::Structure("map is not bijective".into()));
        }
        let map = self.map.iter().map(|(k, v)| (v.clone(), k.clone())).collect();
        GradedMap::new(self.target.clone(), self.source.clone(), map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arity_bookkeeping() {
        let x = GradedSet::from_atoms(&[("a", 2), ("b", 0)]);
        assert_eq!(x.arity(&Elem::atom("a")).unwrap(), 2);
        assert_eq!(x.fiber(0).len(), 1);
        assert_eq!(x.words(2).len(), 4);
        assert!(x.arity(&Elem::atom("zzz")).is_err());
    }

    #[test]
    fn maps_must_preserve_arity() {
        let x = GradedSet::from_atoms(&[("a", 2)]);
        let y = GradedSet::from_atoms(&[("u", 1)]);
        let m: BTreeMap<Elem, Elem> = [(Elem::atom("a"), Elem::atom("u"))].into_iter().collect();
        assert!(matches!(
            GradedMap::new(x, y, m),
            Err(GradedError::NotArityPreserving { .. })
        ));
    }

    #[test]
    fn elem_display_nests() {
        let e = Elem::pair(Elem::atom("a"), vec![Elem::atom("u"), Elem::atom("v")]);
        assert_eq!(e.to_string(), "(a;u v)");
        let nested = Elem::pair(e.clone(), vec![]);
        assert_eq!(nested.to_string(), "((a;u v);)");
    }
}
