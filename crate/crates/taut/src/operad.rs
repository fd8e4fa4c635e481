//! Nonsymmetric operads as monoids for the composition tensor product: finite
//! table presentations, the tautological operad on a graded set, and law
//! checking by exhaustive enumeration within explicit arity bounds.

use std::collections::BTreeMap;
use std::fmt::Debug;

use thiserror::Error;

use crate::graded::{Elem, GradedSet};
use crate::hom::HomElem;
use crate::report::CheckReport;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OperadError {
    #[error("missing table entry for {0}")]
    MissingEntry(String),
    #[error("body length {got} does not match head arity {want}")]
    BodyLength { want: usize, got: usize },
    #[error("arity {0} exceeds the materialized bound {1}")]
    BeyondBound(usize, usize),
    #[error("{0}")]
    Malformed(String),
}

/// A bounded view of an operad: enough structure to enumerate fibers and
/// compose, whether the operad is a finite table or computed on demand.
pub trait OperadView {
    type El: Clone + Ord + Debug;

    /// Largest arity whose fiber is materialized.
    fn bound(&self) -> usize;
    fn fiber(&self, n: usize) -> Vec<Self::El>;
    fn arity(&self, e: &Self::El) -> usize;
    fn unit(&self) -> Self::El;
    fn compose(&self, head: &Self::El, body: &[Self::El]) -> Result<Self::El, OperadError>;
    fn describe(&self, e: &Self::El) -> String;
}

/// Indexed carrier of a graded set: elements in canonical order, words
/// handled as ranks in a fixed radix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Carrier {
    pub elems: Vec<Elem>,
    pub arities: Vec<usize>,
}

impl Carrier {
    pub fn from_graded(x: &GradedSet) -> Carrier {
        let mut elems = Vec::with_capacity(x.len());
        let mut arities = Vec::with_capacity(x.len());
        for (e, n) in x.elements() {
            elems.push(e.clone());
            arities.push(n);
        }
        Carrier { elems, arities }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn word_count(&self, n: usize) -> usize {
        self.len().checked_pow(n as u32).expect("word count fits usize")
    }

    pub fn decode_word(&self, mut rank: usize, n: usize) -> Vec<u16> {
        let base = self.len();
        let mut word = vec![0u16; n];
        for slot in word.iter_mut().rev() {
            *slot = (rank % base) as u16;
            rank /= base;
        }
        word
    }

    pub fn encode_word(&self, word: &[u16]) -> usize {
        let base = self.len();
        word.iter().fold(0usize, |acc, &l| acc * base + l as usize)
    }

    pub fn word_arity(&self, word: &[u16]) -> usize {
        word.iter().map(|&l| self.arities[l as usize]).sum()
    }
}

/// An element of a tautological operad fiber in indexed form: the target
/// element for every word rank of the element's arity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdxHom {
    pub arity: usize,
    pub targets: Vec<u16>,
}

/// The tautological operad `[X, X]` with fibers materialized up to a bound.
#[derive(Debug, Clone)]
pub struct TautOperad {
    graded: GradedSet,
    carrier: Carrier,
    bound: usize,
    fibers: Vec<Vec<IdxHom>>,
}

impl TautOperad {
    pub fn new(x: &GradedSet, bound: usize) -> TautOperad {
        let carrier = Carrier::from_graded(x);
        let fibers = (0..=bound).map(|n| Self::enumerate_fiber(&carrier, n)).collect();
        TautOperad { graded: x.clone(), carrier, bound, fibers }
    }

    fn enumerate_fiber(carrier: &Carrier, n: usize) -> Vec<IdxHom> {
        let word_count = carrier.word_count(n);
        // candidate targets per word
        let mut candidates = Vec::with_capacity(word_count);
        for rank in 0..word_count {
            let word = carrier.decode_word(rank, n);
            let sum = carrier.word_arity(&word);
            let targets: Vec<u16> = (0..carrier.len())
                .filter(|&i| carrier.arities[i] == sum)
                .map(|i| i as u16)
                .collect();
            if targets.is_empty() {
                return Vec::new();
            }
            candidates.push(targets);
        }
        // odometer over the product of candidate lists
        let mut out = Vec::new();
        let mut counters = vec![0usize; word_count];
        loop {
            let targets: Vec<u16> = counters
                .iter()
                .zip(&candidates)
                .map(|(&c, opts)| opts[c])
                .collect();
            out.push(IdxHom { arity: n, targets });
            let mut i = word_count;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                counters[i] += 1;
                if counters[i] < candidates[i].len() {
                    break;
                }
                counters[i] = 0;
            }
        }
    }

    pub fn graded_set(&self) -> &GradedSet {
        &self.graded
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn fiber_size(&self, n: usize) -> usize {
        self.fibers.get(n).map(Vec::len).unwrap_or(0)
    }

    /// Expand an indexed element into its assignment-table form.
    pub fn to_table(&self, h: &IdxHom) -> HomElem {
        let mut table = BTreeMap::new();
        for rank in 0..self.carrier.word_count(h.arity) {
            let word: Vec<Elem> = self
                .carrier
                .decode_word(rank, h.arity)
                .into_iter()
                .map(|i| self.carrier.elems[i as usize].clone())
                .collect();
            table.insert(word, self.carrier.elems[h.targets[rank] as usize].clone());
        }
        HomElem { arity: h.arity, table }
    }

    pub fn from_table(&self, h: &HomElem) -> Result<IdxHom, OperadError> {
        let word_count = self.carrier.word_count(h.arity);
        if h.table.len() != word_count {
            return Err(OperadError::Malformed(format!(
                "table has {} entries, expected {}",
                h.table.len(),
                word_count
            )));
        }
        let index: BTreeMap<&Elem, u16> = self
            .carrier
            .elems
            .iter()
            .enumerate()
            .map(|(i, e)| (e, i as u16))
            .collect();
        let mut targets = vec![0u16; word_count];
        for (word, value) in &h.table {
            let idx: Vec<u16> = word
                .iter()
                .map(|e| index.get(e).copied().ok_or_else(|| {
                    OperadError::Malformed(format!("letter {e} not in carrier"))
                }))
                .collect::<Result<_, _>>()?;
            let rank = self.carrier.encode_word(&idx);
            targets[rank] = *index
                .get(value)
                .ok_or_else(|| OperadError::Malformed(format!("target {value} not in carrier")))?;
        }
        Ok(IdxHom { arity: h.arity, targets })
    }
}

impl OperadView for TautOperad {
    type El = IdxHom;

    fn bound(&self) -> usize {
        self.bound
    }

    fn fiber(&self, n: usize) -> Vec<IdxHom> {
        self.fibers.get(n).cloned().unwrap_or_default()
    }

    fn arity(&self, e: &IdxHom) -> usize {
        e.arity
    }

    fn unit(&self) -> IdxHom {
        IdxHom {
            arity: 1,
            targets: (0..self.carrier.len() as u16).collect(),
        }
    }

    /// Block substitution: feed each body element its block of the input
    /// word, then apply the head to the resulting word.
    fn compose(&self, head: &IdxHom, body: &[IdxHom]) -> Result<IdxHom, OperadError> {
        if body.len() != head.arity {
            return Err(OperadError::BodyLength { want: head.arity, got: body.len() });
        }
        let base = self.carrier.len();
        let m: usize = body.iter().map(|b| b.arity).sum();
        let word_count = self.carrier.word_count(m);
        let mut targets = Vec::with_capacity(word_count);
        for rank in 0..word_count {
            let word = self.carrier.decode_word(rank, m);
            let mut offset = 0;
            let mut head_rank = 0usize;
            for b in body {
                let block = &word[offset..offset + b.arity];
                let block_rank =
                    block.iter().fold(0usize, |acc, &l| acc * base + l as usize);
                head_rank = head_rank * base + b.targets[block_rank] as usize;
                offset += b.arity;
            }
            targets.push(head.targets[head_rank]);
        }
        Ok(IdxHom { arity: m, targets })
    }

    fn describe(&self, e: &IdxHom) -> String {
        self.to_table(e).canonical_string()
    }
}

/// A finite operad presentation: carrier, unit and an explicit composition
/// table keyed by composable pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableOperad {
    pub carrier: GradedSet,
    pub unit: Elem,
    pub table: BTreeMap<(Elem, Vec<Elem>), Elem>,
    bound: usize,
}

impl TableOperad {
    pub fn new(
        carrier: GradedSet,
        unit: Elem,
        table: BTreeMap<(Elem, Vec<Elem>), Elem>,
        bound: usize,
    ) -> Result<TableOperad, OperadError> {
        let unit_arity = carrier
            .arity(&unit)
            .map_err(|e| OperadError::Malformed(e.to_string()))?;
        if unit_arity != 1 {
            return Err(OperadError::Malformed(format!(
                "unit {unit} has arity {unit_arity}, expected 1"
            )));
        }
        for ((head, body), value) in &table {
            let head_arity = carrier
                .arity(head)
                .map_err(|e| OperadError::Malformed(e.to_string()))?;
            if body.len() != head_arity {
                return Err(OperadError::Malformed(format!(
                    "entry {head}{}: body length {} does not match arity {head_arity}",
                    crate::graded::word_str(body),
                    body.len()
                )));
            }
            let expected = carrier
                .word_arity(body)
                .map_err(|e| OperadError::Malformed(e.to_string()))?;
            let got = carrier
                .arity(value)
                .map_err(|e| OperadError::Malformed(e.to_string()))?;
            if expected != got {
                return Err(OperadError::Malformed(format!(
                    "entry {head}{}: composite arity {got}, expected {expected}",
                    crate::graded::word_str(body)
                )));
            }
        }
        Ok(TableOperad { carrier, unit, table, bound })
    }

    /// One element in every arity up to the bound, with the unique possible
    /// composition table.
    pub fn terminal(bound: usize) -> TableOperad {
        let carrier = GradedSet::new(
            (0..=bound).map(|n| (Elem::atom(format!("t{n}")), n)),
        )
        .expect("distinct names");
        let mut table = BTreeMap::new();
        for n in 0..=bound {
            let head = Elem::atom(format!("t{n}"));
            for body_arities in bounded_profiles(n, bound) {
                let body: Vec<Elem> =
                    body_arities.iter().map(|k| Elem::atom(format!("t{k}"))).collect();
                let total: usize = body_arities.iter().sum();
                table.insert((head.clone(), body), Elem::atom(format!("t{total}")));
            }
        }
        TableOperad::new(carrier, Elem::atom("t1"), table, bound).expect("terminal is well-formed")
    }

    /// Restrict the presentation to a sub-carrier, if the table is closed on
    /// it and the unit survives.
    pub fn restrict_to(&self, keep: &[Elem]) -> Option<TableOperad> {
        if !keep.contains(&self.unit) {
            return None;
        }
        let carrier = GradedSet::new(
            keep.iter()
                .map(|e| Ok::<_, ()>((e.clone(), self.carrier.arity(e).map_err(|_| ())?)))
                .collect::<Result<Vec<_>, _>>()
                .ok()?,
        )
        .ok()?;
        let mut table = BTreeMap::new();
        for ((head, body), value) in &self.table {
            if keep.contains(head) && body.iter().all(|b| keep.contains(b)) {
                if !keep.contains(value) {
                    return None;
                }
                table.insert((head.clone(), body.clone()), value.clone());
            }
        }
        TableOperad::new(carrier, self.unit.clone(), table, self.bound).ok()
    }
}

/// Ordered arity profiles of length `len` with total at most `max_total`.
fn bounded_profiles(len: usize, max_total: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for prefix in &out {
            let used: usize = prefix.iter().sum();
            for k in 0..=(max_total - used) {
                let mut v = prefix.clone();
                v.push(k);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

impl OperadView for TableOperad {
    type El = Elem;

    fn bound(&self) -> usize {
        self.bound
    }

    fn fiber(&self, n: usize) -> Vec<Elem> {
        self.carrier.fiber(n).into_iter().cloned().collect()
    }

    fn arity(&self, e: &Elem) -> usize {
        self.carrier.arity(e).expect("element of the carrier")
    }

    fn unit(&self) -> Elem {
        self.unit.clone()
    }

    fn compose(&self, head: &Elem, body: &[Elem]) -> Result<Elem, OperadError> {
        let want = self.arity(head);
        if body.len() != want {
            return Err(OperadError::BodyLength { want, got: body.len() });
        }
        self.table
            .get(&(head.clone(), body.to_vec()))
            .cloned()
            .ok_or_else(|| {
                OperadError::MissingEntry(format!(
                    "{head}{}",
                    crate::graded::word_str(body)
                ))
            })
    }

    fn describe(&self, e: &Elem) -> String {
        e.to_string()
    }
}

/// All words over the materialized fibers with the given length and total
/// arity at most `max_total`.
fn bounded_words<E: Clone>(
    fibers: &[Vec<E>],
    arity_of: impl Fn(&E) -> usize + Copy,
    len: usize,
    max_total: usize,
) -> Vec<Vec<E>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for prefix in &out {
            let used: usize = prefix.iter().map(|e| arity_of(e)).sum();
            for fiber in fibers.iter().take(max_total - used + 1) {
                for e in fiber {
                    let mut v = prefix.clone();
                    v.push(e.clone());
                    next.push(v);
                }
            }
        }
        out = next;
    }
    out
}

/// Exact number of associativity configurations `check_monoid` would visit
/// at the given bound; used to pick feasible bounds before enumerating.
pub fn monoid_check_cost(fiber_sizes: &[usize], bound: usize) -> u128 {
    // words of length `len` with total arity <= rem, counted by profile
    fn word_count(sizes: &[usize], len: usize, rem: usize) -> u128 {
        if len == 0 {
            return 1;
        }
        let mut total = 0u128;
        for k in 0..=rem {
            if sizes.get(k).copied().unwrap_or(0) == 0 {
                continue;
            }
            total += sizes[k] as u128 * word_count(sizes, len - 1, rem - k);
        }
        total
    }
    // phi configurations for a body with letter arities `ks` and a shared
    // remaining budget: product of nested word counts
    fn phi_count(sizes: &[usize], ks: &[usize], rem: usize) -> u128 {
        match ks.split_first() {
            None => 1,
            Some((&k, rest)) => {
                let mut total = 0u128;
                for spent in 0..=rem {
                    let inner = word_count_exact(sizes, k, spent);
                    if inner == 0 {
                        continue;
                    }
                    total += inner * phi_count(sizes, rest, rem - spent);
                }
                total
            }
        }
    }
    fn word_count_exact(sizes: &[usize], len: usize, total: usize) -> u128 {
        if len == 0 {
            return if total == 0 { 1 } else { 0 };
        }
        let mut acc = 0u128;
        for k in 0..=total {
            if sizes.get(k).copied().unwrap_or(0) == 0 {
                continue;
            }
            acc += sizes[k] as u128 * word_count_exact(sizes, len - 1, total - k);
        }
        acc
    }

    let mut cost = 0u128;
    for (n, &heads) in fiber_sizes.iter().enumerate().take(bound + 1) {
        if heads == 0 {
            continue;
        }
        // enumerate body profiles with sum <= bound
        for profile in bounded_profiles(n, bound) {
            let body_count: u128 = profile
                .iter()
                .map(|&k| fiber_sizes.get(k).copied().unwrap_or(0) as u128)
                .product();
            if body_count == 0 {
                continue;
            }
            let phis = phi_count(fiber_sizes, &profile, bound);
            cost += heads as u128 * body_count * phis;
        }
    }
    cost
}

/// Verify the monoid laws (associativity and both unit laws) on every
/// composable configuration whose element and composite arities stay within
/// `bound`. Missing table entries surface as `Error`, law violations as
/// `Fail` with the violating configuration.
pub fn check_monoid<V: OperadView>(view: &V, bound: usize) -> CheckReport {
    let fibers: Vec<Vec<V::El>> = (0..=bound).map(|n| view.fiber(n)).collect();
    let unit = view.unit();
    let mut checked = 0usize;

    for fiber in &fibers {
        for e in fiber {
            checked += 1;
            match view.compose(&unit, std::slice::from_ref(e)) {
                Ok(v) if &v == e => {}
                Ok(v) => {
                    return CheckReport::fail(
                        "monoid-laws",
                        format!(
                            "left unit fails at {}: got {}",
                            view.describe(e),
                            view.describe(&v)
                        ),
                        checked,
                    )
                }
                Err(err) => {
                    return CheckReport::error(
                        "monoid-laws",
                        format!("left unit at {}: {err}", view.describe(e)),
                    )
                }
            }
            let units = vec![unit.clone(); view.arity(e)];
            match view.compose(e, &units) {
                Ok(v) if &v == e => {}
                Ok(v) => {
                    return CheckReport::fail(
                        "monoid-laws",
                        format!(
                            "right unit fails at {}: got {}",
                            view.describe(e),
                            view.describe(&v)
                        ),
                        checked,
                    )
                }
                Err(err) => {
                    return CheckReport::error(
                        "monoid-laws",
                        format!("right unit at {}: {err}", view.describe(e)),
                    )
                }
            }
        }
    }

    let arity_of = |e: &V::El| view.arity(e);
    for n in 0..=bound {
        for a in &fibers[n] {
            for psi in bounded_words(&fibers, arity_of, n, bound) {
                let mid = match view.compose(a, &psi) {
                    Ok(v) => v,
                    Err(err) => {
                        return CheckReport::error(
                            "monoid-laws",
                            format!("composing {}: {err}", view.describe(a)),
                        )
                    }
                };
                // nested words: one phi per body letter, joint arity budget
                let profiles: Vec<usize> = psi.iter().map(arity_of).collect();
                for phis in nested_bounded_words(&fibers, arity_of, &profiles, bound) {
                    checked += 1;
                    let flat: Vec<V::El> = phis.iter().flatten().cloned().collect();
                    let lhs = match view.compose(&mid, &flat) {
                        Ok(v) => v,
                        Err(err) => {
                            return CheckReport::error(
                                "monoid-laws",
                                format!("outer composite: {err}"),
                            )
                        }
                    };
                    let inner: Result<Vec<V::El>, OperadError> = psi
                        .iter()
                        .zip(&phis)
                        .map(|(b, phi)| view.compose(b, phi))
                        .collect();
                    let inner = match inner {
                        Ok(v) => v,
                        Err(err) => {
                            return CheckReport::error(
                                "monoid-laws",
                                format!("inner composite: {err}"),
                            )
                        }
                    };
                    let rhs = match view.compose(a, &inner) {
                        Ok(v) => v,
                        Err(err) => {
                            return CheckReport::error(
                                "monoid-laws",
                                format!("re-composite: {err}"),
                            )
                        }
                    };
                    if lhs != rhs {
                        let body = psi
                            .iter()
                            .map(|e| view.describe(e))
                            .collect::<Vec<_>>()
                            .join(" ");
                        return CheckReport::fail(
                            "monoid-laws",
                            format!(
                                "associativity fails at head {} with body [{}]",
                                view.describe(a),
                                body
                            ),
                            checked,
                        );
                    }
                }
            }
        }
    }
    CheckReport::pass("monoid-laws", checked)
}

fn nested_bounded_words<E: Clone>(
    fibers: &[Vec<E>],
    arity_of: impl Fn(&E) -> usize + Copy,
    lens: &[usize],
    max_total: usize,
) -> Vec<Vec<Vec<E>>> {
    let mut out: Vec<(Vec<Vec<E>>, usize)> = vec![(Vec::new(), 0)];
    for &len in lens {
        let mut next = Vec::new();
        for (prefix, used) in &out {
            for word in bounded_words(fibers, arity_of, len, max_total - used) {
                let arity: usize = word.iter().map(|e| arity_of(e)).sum();
                let mut v = prefix.clone();
                v.push(word);
                next.push((v, used + arity));
            }
        }
        out = next;
    }
    out.into_iter().map(|(v, _)| v).collect()
}

/// An operad homomorphism presented by its element assignment.
#[derive(Debug, Clone)]
pub struct OperadHom<PEl, OEl> {
    pub map: BTreeMap<PEl, OEl>,
}

impl<PEl: Clone + Ord + Debug, OEl: Clone + Ord + Debug> OperadHom<PEl, OEl> {
    pub fn apply(&self, e: &PEl) -> Result<&OEl, OperadError> {
        self.map
            .get(e)
            .ok_or_else(|| OperadError::MissingEntry(format!("{e:?}")))
    }
}

/// Verify that an assignment is an operad homomorphism on every composable
/// configuration within the bound: arities, the unit, and composition are
/// preserved.
pub fn check_operad_hom<P: OperadView, O: OperadView>(
    source: &P,
    target: &O,
    hom: &OperadHom<P::El, O::El>,
    bound: usize,
) -> CheckReport {
    let mut checked = 0;
    for n in 0..=bound {
        for e in source.fiber(n) {
            checked += 1;
            match hom.apply(&e) {
                Ok(img) => {
                    if target.arity(img) != n {
                        return CheckReport::fail(
                            "operad-hom",
                            format!(
                                "arity not preserved at {}: image {}",
                                source.describe(&e),
                                target.describe(img)
                            ),
                            checked,
                        );
                    }
                }
                Err(err) => return CheckReport::error("operad-hom", err.to_string()),
            }
        }
    }
    match hom.apply(&source.unit()) {
        Ok(img) if *img == target.unit() => {}
        Ok(img) => {
            return CheckReport::fail(
                "operad-hom",
                format!("unit maps to {}", target.describe(img)),
                checked,
            )
        }
        Err(err) => return CheckReport::error("operad-hom", err.to_string()),
    }
    let fibers: Vec<Vec<P::El>> = (0..=bound).map(|n| source.fiber(n)).collect();
    let arity_of = |e: &P::El| source.arity(e);
    for n in 0..=bound {
        for a in &fibers[n] {
            for psi in bounded_words(&fibers, arity_of, n, bound) {
                checked += 1;
                let src = match source.compose(a, &psi) {
                    Ok(v) => v,
                    Err(OperadError::MissingEntry(_)) => continue,
                    Err(err) => return CheckReport::error("operad-hom", err.to_string()),
                };
                let img_head = match hom.apply(a) {
                    Ok(v) => v.clone(),
                    Err(err) => return CheckReport::error("operad-hom", err.to_string()),
                };
                let img_body: Result<Vec<O::El>, OperadError> =
                    psi.iter().map(|b| hom.apply(b).cloned()).collect();
                let img_body = match img_body {
                    Ok(v) => v,
                    Err(err) => return CheckReport::error("operad-hom", err.to_string()),
                };
                let via_target = match target.compose(&img_head, &img_body) {
                    Ok(v) => v,
                    Err(err) => return CheckReport::error("operad-hom", err.to_string()),
                };
                let img_src = match hom.apply(&src) {
                    Ok(v) => v.clone(),
                    Err(err) => return CheckReport::error("operad-hom", err.to_string()),
                };
                if via_target != img_src {
                    return CheckReport::fail(
                        "operad-hom",
                        format!(
                            "composition not preserved at head {} body {:?}",
                            source.describe(a),
                            psi.iter().map(|e| source.describe(e)).collect::<Vec<_>>()
                        ),
                        checked,
                    );
                }
            }
        }
    }
    CheckReport::pass("operad-hom", checked)
}

/// An algebra witness: an assignment of tautological operations to the
/// elements of an operad.
#[derive(Debug, Clone)]
pub struct AlgebraWitness<PEl> {
    pub assignment: BTreeMap<PEl, IdxHom>,
}

impl<PEl: Clone + Ord + Debug> AlgebraWitness<PEl> {
    pub fn hom(&self) -> OperadHom<PEl, IdxHom> {
        OperadHom { map: self.assignment.clone() }
    }
}

/// An algebra is an operad homomorphism into the tautological operad; the
/// check is homomorphism checking against `taut`.
pub fn check_algebra<P: OperadView>(
    source: &P,
    taut: &TautOperad,
    witness: &AlgebraWitness<P::El>,
    bound: usize,
) -> CheckReport {
    check_operad_hom(source, taut, &witness.hom(), bound)
}

/// Is this an algebra in plain sets, i.e. is the carrier concentrated in
/// degree zero?
pub fn is_set_algebra(taut: &TautOperad) -> bool {
    taut.graded_set().concentrated_in_degree_zero()
}

/// Pull an algebra back along an operad map: the composite assignment.
pub fn restrict_algebra<PEl, OEl>(
    hom: &OperadHom<PEl, OEl>,
    witness: &AlgebraWitness<OEl>,
) -> Result<AlgebraWitness<PEl>, OperadError>
where
    PEl: Clone + Ord + Debug,
    OEl: Clone + Ord + Debug,
{
    let mut assignment = BTreeMap::new();
    for (p, o) in &hom.map {
        let h = witness
            .assignment
            .get(o)
            .ok_or_else(|| OperadError::MissingEntry(format!("{o:?}")))?;
        assignment.insert(p.clone(), h.clone());
    }
    Ok(AlgebraWitness { assignment })
}

/// All operad homomorphisms between two bounded views, found by filtering
/// the arity-preserving assignments through the homomorphism check.
pub fn enumerate_operad_homs<P: OperadView, O: OperadView>(
    source: &P,
    target: &O,
    bound: usize,
) -> Vec<OperadHom<P::El, O::El>> {
    let mut assignments: Vec<BTreeMap<P::El, O::El>> = vec![BTreeMap::new()];
    for n in 0..=bound {
        for e in source.fiber(n) {
            let candidates = target.fiber(n);
            let mut next = Vec::with_capacity(assignments.len() * candidates.len());
            for partial in &assignments {
                for c in &candidates {
                    let mut m = partial.clone();
                    m.insert(e.clone(), c.clone());
                    next.push(m);
                }
            }
            assignments = next;
        }
    }
    assignments
        .into_iter()
        .map(|map| OperadHom { map })
        .filter(|h| check_operad_hom(source, target, h, bound).passed())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn taut_fiber_sizes_degree_zero() {
        let x = GradedSet::from_atoms(&[("x", 0), ("y", 0)]);
        let taut = TautOperad::new(&x, 2);
        assert_eq!(taut.fiber_size(0), 2);
        assert_eq!(taut.fiber_size(1), 4);
        assert_eq!(taut.fiber_size(2), 16);
    }

    #[test]
    fn taut_singleton_carrier() {
        let x = GradedSet::from_atoms(&[("x", 0)]);
        let taut = TautOperad::new(&x, 3);
        for n in 0..=3 {
            assert_eq!(taut.fiber_size(n), 1);
        }
    }

    #[test]
    fn taut_single_unary_element() {
        let x = GradedSet::from_atoms(&[("u", 1)]);
        let taut = TautOperad::new(&x, 1);
        assert_eq!(taut.fiber_size(1), 1);
        assert_eq!(taut.fiber(1)[0], taut.unit());
    }

    #[test]
    fn unit_is_two_sided() {
        let x = GradedSet::from_atoms(&[("x", 0), ("y", 0)]);
        let taut = TautOperad::new(&x, 2);
        let unit = taut.unit();
        for n in 0..=2 {
            for e in taut.fiber(n) {
                assert_eq!(taut.compose(&unit, &[e.clone()]).unwrap(), e);
                assert_eq!(taut.compose(&e, &vec![unit.clone(); n]).unwrap(), e);
            }
        }
    }

    #[test]
    fn binary_composition_matches_function_composition() {
        // X = {x, y} in degree 0: composing a binary table with two unary
        // tables must be f(g1(-), g2(-))
        let x = GradedSet::from_atoms(&[("x", 0), ("y", 0)]);
        let taut = TautOperad::new(&x, 2);
        for f in taut.fiber(2) {
            for g1 in taut.fiber(1) {
                for g2 in taut.fiber(1) {
                    let composite = taut.compose(&f, &[g1.clone(), g2.clone()]).unwrap();
                    for a in 0..2u16 {
                        for b in 0..2u16 {
                            let direct = f.targets
                                [(g1.targets[a as usize] * 2 + g2.targets[b as usize]) as usize];
                            assert_eq!(composite.targets[(a * 2 + b) as usize], direct);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn terminal_operad_passes() {
        let o = TableOperad::terminal(2);
        assert!(check_monoid(&o, 2).passed());
    }

    #[test]
    fn taut_passes_monoid_laws_small() {
        let x = GradedSet::from_atoms(&[("x", 0), ("y", 0)]);
        let taut = TautOperad::new(&x, 2);
        let report = check_monoid(&taut, 2);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn corrupted_table_fails_with_witness() {
        let mut o = TableOperad::terminal(2);
        // corrupt one entry: t1(t1) becomes t0-composite shaped... keep the
        // arity right but break associativity by redirecting t2(t0,t0)
        let key = (
            Elem::atom("t1"),
            vec![Elem::atom("t1")],
        );
        assert!(o.table.contains_key(&key));
        // make the law checker see a wrong unit composite
        o.table.insert(key, Elem::atom("t1")); // still fine: t1(t1) = t1
        let bad_key = (Elem::atom("t1"), vec![Elem::atom("t0")]);
        o.table.insert(bad_key, Elem::atom("t1")); // arity says 0, value arity 1
        assert!(TableOperad::new(o.carrier.clone(), o.unit.clone(), o.table.clone(), 2).is_err());
    }

    #[test]
    fn missing_entry_reports_error() {
        let mut o = TableOperad::terminal(2);
        o.table.remove(&(Elem::atom("t2"), vec![Elem::atom("t0"), Elem::atom("t0")]));
        let report = check_monoid(&o, 2);
        assert_eq!(report.status, crate::report::Status::Error);
    }

    #[test]
    fn monoid_cost_matches_enumeration_scale() {
        let x = GradedSet::from_atoms(&[("x", 0), ("y", 0)]);
        let taut = TautOperad::new(&x, 2);
        let sizes: Vec<usize> = (0..=2).map(|n| taut.fiber_size(n)).collect();
        let cost = monoid_check_cost(&sizes, 2);
        assert!(cost > 0);
        let report = check_monoid(&taut, 2);
        // unit-law checks add the fiber sizes on top of the associativity count
        let fibers: usize = sizes.iter().sum();
        assert_eq!(report.checked, cost as usize + fibers);
    }
}
