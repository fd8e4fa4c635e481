//! Collections: truncated globular sets equipped with an arity map into
//! pasting diagrams, their homomorphisms, and the composition tensor product
//! computed by pasting substitution.

use std::collections::BTreeMap;

use crate::glob::{
    labelings, GlobError, GlobMap, LabeledDiagram, NestedDiagram, TruncGlobSet,
};
use crate::graded::GradedSet;
use crate::report::CheckReport;
use crate::tree::{substitute, CellId, DiagramOfDiagrams, PastingDiagram};

/// A globular set fibered over the pasting diagrams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collection {
    pub carrier: TruncGlobSet,
    arity: BTreeMap<(usize, String), PastingDiagram>,
}

impl Collection {
    pub fn new(
        carrier: TruncGlobSet,
        arity: BTreeMap<(usize, String), PastingDiagram>,
    ) -> Result<Collection, GlobError> {
        for k in 0..=carrier.dim() {
            for c in carrier.cells(k) {
                let a = arity
                    .get(&(k, c.clone()))
                    .ok_or_else(|| GlobError::Malformed(format!("no arity for {k}-cell {c}")))?;
                if a.dim() != k {
                    return Err(GlobError::Malformed(format!(
                        "arity of {k}-cell {c} has dimension {}",
                        a.dim()
                    )));
                }
                if k > 0 {
                    let b = a.src().expect("k > 0");
                    let s = carrier.src_of(k, c)?;
                    let t = carrier.tgt_of(k, c)?;
                    if arity.get(&(k - 1, s.to_string())) != Some(&b)
                        || arity.get(&(k - 1, t.to_string())) != Some(&b)
                    {
                        return Err(GlobError::Malformed(format!(
                            "arity map is not globular at {k}-cell {c}"
                        )));
                    }
                }
            }
        }
        Ok(Collection { carrier, arity })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn arity_of(&self, k: usize, cell: &str) -> Result<&PastingDiagram, GlobError> {
        self.arity
            .get(&(k, cell.to_string()))
            .ok_or_else(|| GlobError::UnknownCell(k, cell.to_string()))
    }

    /// The unit for the tensor product: one cell per dimension, each sitting
    /// over the single globe of its dimension.
    pub fn unit(dim: usize) -> Collection {
        let carrier = TruncGlobSet::terminal(dim);
        let arity = (0..=dim)
            .map(|k| ((k, format!("u{k}")), PastingDiagram::globe(k)))
            .collect();
        Collection { carrier, arity }
    }

    /// The degenerate collection on a globular set: every cell sits over the
    /// iterated identity of its dimension.
    pub fn degenerate(carrier: TruncGlobSet) -> Collection {
        let arity = (0..=carrier.dim())
            .flat_map(|k| {
                carrier
                    .cells(k)
                    .iter()
                    .map(move |c| ((k, c.clone()), PastingDiagram::id_tower(k)))
                    .collect::<Vec<_>>()
            })
            .collect();
        Collection { carrier, arity }
    }

    /// Is the arity map the degenerate one (factoring through the identity
    /// tower)?
    pub fn is_degenerate(&self) -> bool {
        self.arity.values().all(PastingDiagram::is_degenerate)
    }

    /// Bounded truncation of the terminal collection: the cells of dimension
    /// `k` are the pasting diagrams themselves, over themselves.
    pub fn bounded_terminal(dim: usize, max_nodes: usize) -> Collection {
        let mut cells: Vec<Vec<String>> = vec![Vec::new(); dim + 1];
        let mut src: Vec<BTreeMap<String, String>> = vec![BTreeMap::new(); dim + 1];
        let mut tgt: Vec<BTreeMap<String, String>> = vec![BTreeMap::new(); dim + 1];
        let mut arity = BTreeMap::new();
        for k in 0..=dim {
            for d in PastingDiagram::enumerate(k, max_nodes) {
                let name = d.to_string();
                cells[k].push(name.clone());
                if k > 0 {
                    let b = d.src().expect("k > 0").to_string();
                    src[k].insert(name.clone(), b.clone());
                    tgt[k].insert(name.clone(), b);
                }
                arity.insert((k, name), d);
            }
        }
        let carrier = TruncGlobSet::new(dim, cells, src, tgt).expect("diagram boundaries exist");
        Collection { carrier, arity }
    }

    /// Degenerate collection of a graded set: one 0-cell, the elements as
    /// loops on it, word-length arities.
    pub fn from_graded(x: &GradedSet) -> Collection {
        let names: Vec<String> = x.elements().map(|(e, _)| e.to_string()).collect();
        let carrier = TruncGlobSet::new(
            1,
            vec![vec!["•".to_string()], names.clone()],
            vec![
                BTreeMap::new(),
                names.iter().map(|n| (n.clone(), "•".to_string())).collect(),
            ],
            vec![
                BTreeMap::new(),
                names.iter().map(|n| (n.clone(), "•".to_string())).collect(),
            ],
        )
        .expect("loops are globular");
        let mut arity = BTreeMap::new();
        arity.insert((0, "•".to_string()), PastingDiagram::point());
        for (e, n) in x.elements() {
            arity.insert(
                (1, e.to_string()),
                PastingDiagram::from_grid(&vec![0; n], 1).expect("paths fit dimension 1"),
            );
        }
        Collection { carrier, arity }
    }
}

/// Verify that a cell assignment is a collection homomorphism: a globular
/// map making the arity triangle commute.
pub fn check_collection_map(x: &Collection, y: &Collection, f: &GlobMap) -> CheckReport {
    let glob = f.check(&x.carrier, &y.carrier);
    if !glob.passed() {
        return glob;
    }
    let mut checked = glob.checked;
    for k in 0..=x.dim() {
        for c in x.carrier.cells(k) {
            checked += 1;
            let img = f.apply(k, c).expect("checked globular");
            let (Ok(a), Ok(b)) = (x.arity_of(k, c), y.arity_of(k, img)) else {
                return CheckReport::error("collection-map", format!("missing arity at {c}"));
            };
            if a != b {
                return CheckReport::fail(
                    "collection-map",
                    format!("arity not preserved at {k}-cell {c}: {a} vs {b}"),
                    checked,
                );
            }
        }
    }
    CheckReport::pass("collection-map", checked)
}

/// A cell of a tensor product of collections: a head cell with a labeled
/// diagram over the other carrier whose shape is the head's arity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TensorCell {
    pub head: (usize, String),
    pub body: LabeledDiagram,
}

impl TensorCell {
    pub fn canonical_name(&self) -> String {
        let body: Vec<String> = self
            .body
            .labels
            .iter()
            .map(|(c, l)| format!("{c}={l}"))
            .collect();
        format!("({};{})", self.head.1, body.join(","))
    }
}

/// The tensor product of two collections with a dictionary from generated
/// cell names back to the structured cells.
#[derive(Debug, Clone)]
pub struct TensorColl {
    pub collection: Collection,
    pub cells: BTreeMap<(usize, String), TensorCell>,
}

/// Compute the arity of a tensor cell: replace every cell of the head's
/// arity shape by the arity of its label and paste.
pub fn tensor_cell_arity(
    y: &Collection,
    head_arity: &PastingDiagram,
    body: &LabeledDiagram,
) -> Result<PastingDiagram, GlobError> {
    let labels: BTreeMap<CellId, PastingDiagram> = body
        .labels
        .iter()
        .map(|(c, l)| Ok((c.clone(), y.arity_of(c.dim(), l)?.clone())))
        .collect::<Result<_, GlobError>>()?;
    let dd = DiagramOfDiagrams::new(head_arity.clone(), labels)?;
    Ok(substitute(&dd)?)
}

/// The same arity by the two-step route: apply the arity map to the labels
/// to get a diagram of diagrams over the terminal globular set, then flatten
/// it with the label-carrying substitution.
pub fn tensor_cell_arity_two_step(
    y: &Collection,
    head_arity: &PastingDiagram,
    body: &LabeledDiagram,
) -> Result<PastingDiagram, GlobError> {
    let terminal = TruncGlobSet::terminal(y.dim().max(head_arity.dim()));
    let labels: BTreeMap<CellId, LabeledDiagram> = body
        .labels
        .iter()
        .map(|(c, l)| {
            let shape = y.arity_of(c.dim(), l)?.clone();
            let lab = labelings(&shape, &terminal)
                .into_iter()
                .next()
                .ok_or_else(|| GlobError::Malformed("terminal labeling missing".into()))?;
            Ok((c.clone(), lab))
        })
        .collect::<Result<_, GlobError>>()?;
    let nested = NestedDiagram { shape: head_arity.clone(), labels };
    Ok(nested.flatten()?.shape)
}

/// The composition tensor product of collections. `max_nodes` bounds the
/// arity shapes that may occur in `x`; exceeding it is an error, never a
/// silent truncation.
pub fn tensor_coll(
    x: &Collection,
    y: &Collection,
    max_nodes: usize,
) -> Result<TensorColl, GlobError> {
    let dim = x.dim();
    let mut cells: Vec<Vec<String>> = vec![Vec::new(); dim + 1];
    let mut src: Vec<BTreeMap<String, String>> = vec![BTreeMap::new(); dim + 1];
    let mut tgt: Vec<BTreeMap<String, String>> = vec![BTreeMap::new(); dim + 1];
    let mut arity = BTreeMap::new();
    let mut dict: BTreeMap<(usize, String), TensorCell> = BTreeMap::new();
    for k in 0..=dim {
        for head in x.carrier.cells(k) {
            let head_arity = x.arity_of(k, head)?;
            if head_arity.tree().node_count() > max_nodes {
                return Err(GlobError::Malformed(format!(
                    "arity {head_arity} of {k}-cell {head} exceeds the shape bound {max_nodes}"
                )));
            }
            for body in labelings(head_arity, &y.carrier) {
                let cell = TensorCell { head: (k, head.clone()), body };
                let name = cell.canonical_name();
                let a = tensor_cell_arity(y, head_arity, &cell.body)?;
                cells[k].push(name.clone());
                arity.insert((k, name.clone()), a);
                if k > 0 {
                    let s_head = x.carrier.src_of(k, head)?;
                    let t_head = x.carrier.tgt_of(k, head)?;
                    let s_cell = TensorCell {
                        head: (k - 1, s_head.to_string()),
                        body: cell.body.src().expect("k > 0"),
                    };
                    let t_cell = TensorCell {
                        head: (k - 1, t_head.to_string()),
                        body: cell.body.tgt().expect("k > 0"),
                    };
                    src[k].insert(name.clone(), s_cell.canonical_name());
                    tgt[k].insert(name.clone(), t_cell.canonical_name());
                }
                dict.insert((k, name), cell);
            }
        }
    }
    let carrier = TruncGlobSet::new(dim, cells, src, tgt)?;
    let collection = Collection::new(carrier, arity)?;
    Ok(TensorColl { collection, cells: dict })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow_collection() -> Collection {
        // one 1-cell `a` over the length-2 path, endpoints over the point
        let carrier = TruncGlobSet::new(
            1,
            vec![vec!["p".into(), "q".into()], vec!["a".into()]],
            vec![
                BTreeMap::new(),
                [("a".to_string(), "p".to_string())].into_iter().collect(),
            ],
            vec![
                BTreeMap::new(),
                [("a".to_string(), "q".to_string())].into_iter().collect(),
            ],
        )
        .unwrap();
        let mut arity = BTreeMap::new();
        arity.insert((0, "p".to_string()), PastingDiagram::point());
        arity.insert((0, "q".to_string()), PastingDiagram::point());
        arity.insert(
            (1, "a".to_string()),
            PastingDiagram::from_grid(&[0, 0], 1).unwrap(),
        );
        Collection::new(carrier, arity).unwrap()
    }

    fn two_arrow_coll() -> Collection {
        // f: x -> y, g: y -> z, h: x -> x over single globes
        let carrier = TruncGlobSet::new(
            1,
            vec![
                vec!["x".into(), "y".into(), "z".into()],
                vec!["f".into(), "g".into(), "h".into()],
            ],
            vec![
                BTreeMap::new(),
                [
                    ("f".to_string(), "x".to_string()),
                    ("g".to_string(), "y".to_string()),
                    ("h".to_string(), "x".to_string()),
                ]
                .into_iter()
                .collect(),
            ],
            vec![
                BTreeMap::new(),
                [
                    ("f".to_string(), "y".to_string()),
                    ("g".to_string(), "z".to_string()),
                    ("h".to_string(), "x".to_string()),
                ]
                .into_iter()
                .collect(),
            ],
        )
        .unwrap();
        let mut arity = BTreeMap::new();
        for p in ["x", "y", "z"] {
            arity.insert((0, p.to_string()), PastingDiagram::point());
        }
        for f in ["f", "g", "h"] {
            arity.insert((1, f.to_string()), PastingDiagram::globe(1));
        }
        Collection::new(carrier, arity).unwrap()
    }

    #[test]
    fn tensor_with_unit_keeps_cells_and_arities() {
        let x = arrow_collection();
        let unit = Collection::unit(1);
        let t = tensor_coll(&x, &unit, 4).unwrap();
        assert_eq!(t.collection.carrier.cells(0).len(), 2);
        assert_eq!(t.collection.carrier.cells(1).len(), 1);
        let (k, name) = t.cells.keys().find(|(k, _)| *k == 1).unwrap().clone();
        assert_eq!(
            t.collection.arity_of(k, &name).unwrap(),
            x.arity_of(1, "a").unwrap()
        );
    }

    #[test]
    fn tensor_bodies_are_composable_words() {
        let x = arrow_collection();
        let y = two_arrow_coll();
        let t = tensor_coll(&x, &y, 4).unwrap();
        // bodies over `a`: the three composable pairs (f,g), (h,f), (h,h)
        assert_eq!(t.collection.carrier.cells(1).len(), 3);
        for (key, _) in t.cells.iter().filter(|((k, _), _)| *k == 1) {
            let a = t.collection.arity_of(key.0, &key.1).unwrap();
            assert_eq!(*a, PastingDiagram::from_grid(&[0, 0], 1).unwrap());
        }
    }

    #[test]
    fn degenerate_inputs_give_degenerate_composites() {
        let g1 = TruncGlobSet::terminal(1);
        let x = Collection::degenerate(g1.clone());
        let y = Collection::degenerate(g1);
        let t = tensor_coll(&x, &y, 3).unwrap();
        assert!(t.collection.is_degenerate());
    }

    #[test]
    fn arity_two_routes_agree() {
        let x = arrow_collection();
        let y = two_arrow_coll();
        let t = tensor_coll(&x, &y, 4).unwrap();
        for ((k, _name), cell) in &t.cells {
            let head_arity = x.arity_of(*k, &cell.head.1).unwrap();
            let one = tensor_cell_arity(&y, head_arity, &cell.body).unwrap();
            let two = tensor_cell_arity_two_step(&y, head_arity, &cell.body).unwrap();
            assert_eq!(one, two);
        }
    }

    #[test]
    fn collection_map_checks_arity_triangle() {
        let y = two_arrow_coll();
        let id = GlobMap::identity(&y.carrier);
        assert!(check_collection_map(&y, &y, &id).passed());
        // terminal map into the bounded terminal collection
        let term = Collection::bounded_terminal(1, 3);
        let mut map = vec![BTreeMap::new(), BTreeMap::new()];
        for p in ["x", "y", "z"] {
            map[0].insert(p.to_string(), PastingDiagram::point().to_string());
        }
        for f in ["f", "g", "h"] {
            map[1].insert(f.to_string(), PastingDiagram::globe(1).to_string());
        }
        let to_terminal = GlobMap { map };
        assert!(check_collection_map(&y, &term, &to_terminal).passed());
        // a map crushing the path-arity cell onto a globe-arity cell fails
        let x = arrow_collection();
        let mut bad = vec![BTreeMap::new(), BTreeMap::new()];
        bad[0].insert("p".to_string(), "x".to_string());
        bad[0].insert("q".to_string(), "y".to_string());
        bad[1].insert("a".to_string(), "f".to_string());
        let report = check_collection_map(&x, &y, &GlobMap { map: bad });
        assert!(!report.passed());
        assert!(report.witness.is_some());
    }

    #[test]
    fn unit_collection_at_dim_zero_is_the_point() {
        let u = Collection::unit(0);
        let d = Collection::degenerate(TruncGlobSet::terminal(0));
        assert_eq!(u, d);
    }
}
