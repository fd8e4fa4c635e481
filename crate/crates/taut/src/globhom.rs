//! The internal hom `[B, A]` for the composition tensor product of
//! collections.
//!
//! A cell of `[B, A]` over a shape `σ` is a tower: an assignment table from
//! labelings of `σ` by cells of `B` to cells of `A` of the pasted-composite
//! arity, together with compatible tables over the iterated boundary shapes.
//! The towers are what make `[B, A]` a globular set; the top table alone
//! matches the fiberwise product formula, and the hom-tensor adjunction test
//! reconciles the two views.

use std::collections::BTreeMap;

use crate::coll::{tensor_cell_arity, Collection, TensorCell, TensorColl};
use crate::glob::{
    boundary_embedding, labeling_from_leaf_labels, labelings, GlobError, GlobMap,
    LabeledDiagram, TruncGlobSet,
};
use crate::tree::{substitute_full, CellId, DiagramOfDiagrams, PastingDiagram};

/// A cell of the internal hom over its shape, with its boundary towers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HomCell {
    pub shape: PastingDiagram,
    /// Top-level assignment: one target cell per labeling of the shape.
    pub table: BTreeMap<LabeledDiagram, String>,
    pub src: Option<Box<HomCell>>,
    pub tgt: Option<Box<HomCell>>,
}

impl HomCell {
    pub fn dim(&self) -> usize {
        self.shape.dim()
    }

    pub fn apply(&self, body: &LabeledDiagram) -> Result<&str, GlobError> {
        self.table
            .get(body)
            .map(String::as_str)
            .ok_or_else(|| GlobError::Malformed(format!("no entry for labeling of {}", body.shape)))
    }

    /// Injective serialization (towers included).
    pub fn canonical_name(&self) -> String {
        let entries: Vec<String> = self
            .table
            .iter()
            .map(|(b, v)| {
                let labels: Vec<String> =
                    b.labels.iter().map(|(c, l)| format!("{c}={l}")).collect();
                format!("[{}]->{v}", labels.join(","))
            })
            .collect();
        match (&self.src, &self.tgt) {
            (Some(s), Some(t)) => format!(
                "{}{{{}|s={}|t={}}}",
                self.shape,
                entries.join(","),
                s.canonical_name(),
                t.canonical_name()
            ),
            _ => format!("{}{{{}}}", self.shape, entries.join(",")),
        }
    }
}

/// Number of arity-compatible top tables over a shape: the product over
/// labelings of the number of matching target cells.
pub fn hom_table_count(
    b: &Collection,
    a: &Collection,
    shape: &PastingDiagram,
) -> Result<usize, GlobError> {
    let n = shape.dim();
    let mut count = 1usize;
    for body in labelings(shape, &b.carrier) {
        let want = tensor_cell_arity(b, shape, &body)?;
        let matches = a
            .carrier
            .cells(n)
            .iter()
            .filter(|p| a.arity_of(n, p).map(|q| *q == want).unwrap_or(false))
            .count();
        count *= matches;
    }
    Ok(count)
}

/// Enumerate the full fiber of `[B, A]` over a shape, towers included.
pub fn glob_hom_fiber(
    b: &Collection,
    a: &Collection,
    shape: &PastingDiagram,
) -> Result<Vec<HomCell>, GlobError> {
    let n = shape.dim();
    let bodies = labelings(shape, &b.carrier);
    // precompute the composite arity per labeling
    let mut wants = Vec::with_capacity(bodies.len());
    for body in &bodies {
        wants.push(tensor_cell_arity(b, shape, body)?);
    }
    if n == 0 {
        let mut cells = vec![HomCell {
            shape: shape.clone(),
            table: BTreeMap::new(),
            src: None,
            tgt: None,
        }];
        for (body, want) in bodies.iter().zip(&wants) {
            let candidates: Vec<&String> = a
                .carrier
                .cells(0)
                .iter()
                .filter(|p| a.arity_of(0, p).map(|q| q == want).unwrap_or(false))
                .collect();
            let mut next = Vec::with_capacity(cells.len() * candidates.len());
            for cell in &cells {
                for cand in &candidates {
                    let mut c = cell.clone();
                    c.table.insert(body.clone(), (*cand).clone());
                    next.push(c);
                }
            }
            cells = next;
        }
        return Ok(cells);
    }
    let boundary_shape = shape.src().expect("n > 0");
    let boundary_fiber = glob_hom_fiber(b, a, &boundary_shape)?;
    let src_embed = boundary_embedding(shape.tree(), n - 1, false);
    let tgt_embed = boundary_embedding(shape.tree(), n - 1, true);
    let restrict = |body: &LabeledDiagram, embed: &BTreeMap<CellId, CellId>| LabeledDiagram {
        shape: boundary_shape.clone(),
        labels: embed
            .iter()
            .map(|(c, img)| (c.clone(), body.labels[img].clone()))
            .collect(),
    };
    let mut out = Vec::new();
    for s_cell in &boundary_fiber {
        for t_cell in &boundary_fiber {
            if n >= 2 && (s_cell.src != t_cell.src || s_cell.tgt != t_cell.tgt) {
                continue;
            }
            let mut tables: Vec<BTreeMap<LabeledDiagram, String>> = vec![BTreeMap::new()];
            for (body, want) in bodies.iter().zip(&wants) {
                let s_body = restrict(body, &src_embed);
                let t_body = restrict(body, &tgt_embed);
                let want_src = s_cell.table.get(&s_body);
                let want_tgt = t_cell.table.get(&t_body);
                let (Some(want_src), Some(want_tgt)) = (want_src, want_tgt) else {
                    return Err(GlobError::Malformed(
                        "boundary table misses a restricted labeling".into(),
                    ));
                };
                let candidates: Vec<&String> = a
                    .carrier
                    .cells(n)
                    .iter()
                    .filter(|p| {
                        a.arity_of(n, p).map(|q| q == want).unwrap_or(false)
                            && a.carrier.src_of(n, p).map(|s| s == want_src).unwrap_or(false)
                            && a.carrier.tgt_of(n, p).map(|t| t == want_tgt).unwrap_or(false)
                    })
                    .collect();
                if candidates.is_empty() {
                    tables.clear();
                    break;
                }
                let mut next = Vec::with_capacity(tables.len() * candidates.len());
                for table in &tables {
                    for cand in &candidates {
                        let mut t = table.clone();
                        t.insert(body.clone(), (*cand).clone());
                        next.push(t);
                    }
                }
                tables = next;
            }
            for table in tables {
                out.push(HomCell {
                    shape: shape.clone(),
                    table,
                    src: Some(Box::new(s_cell.clone())),
                    tgt: Some(Box::new(t_cell.clone())),
                });
            }
        }
    }
    Ok(out)
}

/// The unit of the tautological operad at dimension `k`: the identity
/// assignment on single-globe labelings.
pub fn glob_taut_unit(x: &Collection, k: usize) -> HomCell {
    let shape = PastingDiagram::globe(k);
    let top = CellId { path: vec![0; k], joint: 0 };
    let table = labelings(&shape, &x.carrier)
        .into_iter()
        .map(|body| {
            let value = body.labels[&top].clone();
            (body, value)
        })
        .collect();
    let (src, tgt) = if k == 0 {
        (None, None)
    } else {
        let below = Box::new(glob_taut_unit(x, k - 1));
        (Some(below.clone()), Some(below))
    };
    HomCell { shape, table, src, tgt }
}

/// Compose a hom cell with a boundary-compatible labeling of its shape by
/// hom cells: feed each body cell its block of the input labeling, then
/// apply the head. The result sits over the pasted composite of the body
/// shapes.
pub fn glob_taut_compose(
    x: &Collection,
    head: &HomCell,
    body: &BTreeMap<CellId, HomCell>,
) -> Result<HomCell, GlobError> {
    let sigma = &head.shape;
    for cell in sigma.tree().cells() {
        let label = body
            .get(&cell)
            .ok_or_else(|| GlobError::Malformed(format!("missing body cell at {cell}")))?;
        if label.dim() != cell.dim() {
            return Err(GlobError::Malformed(format!(
                "body cell at {cell} has dimension {}",
                label.dim()
            )));
        }
        if let (Some(s), Some(t)) = (cell.src(), cell.tgt()) {
            let s_ok = body.get(&s).map(|b| Some(b) == label.src.as_deref());
            let t_ok = body.get(&t).map(|b| Some(b) == label.tgt.as_deref());
            if s_ok != Some(true) || t_ok != Some(true) {
                return Err(GlobError::Malformed(format!(
                    "body is not globular at {cell}"
                )));
            }
        }
    }
    let shape_labels: BTreeMap<CellId, PastingDiagram> = body
        .iter()
        .map(|(c, h)| (c.clone(), h.shape.clone()))
        .collect();
    let dd = DiagramOfDiagrams::new(sigma.clone(), shape_labels)?;
    let (result_shape, embeddings) = substitute_full(&dd)?;

    let mut table = BTreeMap::new();
    for chi in labelings(&result_shape, &x.carrier) {
        // apply each leaf's hom cell to its block of the labeling
        let mut leaf_values: BTreeMap<CellId, String> = BTreeMap::new();
        for (leaf, embed) in &embeddings {
            let inner = &body[leaf];
            let block = LabeledDiagram {
                shape: inner.shape.clone(),
                labels: embed
                    .iter()
                    .map(|(ic, rc)| (ic.clone(), chi.labels[rc].clone()))
                    .collect(),
            };
            leaf_values.insert(leaf.clone(), inner.apply(&block)?.to_string());
        }
        let full = labeling_from_leaf_labels(sigma, &x.carrier, &leaf_values)?;
        let assembled = LabeledDiagram { shape: sigma.clone(), labels: full };
        table.insert(chi, head.apply(&assembled)?.to_string());
    }

    let n = sigma.dim();
    let (src, tgt) = if n == 0 {
        (None, None)
    } else {
        let restrict_body = |target_side: bool| -> BTreeMap<CellId, HomCell> {
            boundary_embedding(sigma.tree(), n - 1, target_side)
                .into_iter()
                .map(|(c, img)| (c, body[&img].clone()))
                .collect()
        };
        let head_src = head.src.as_deref().expect("n > 0");
        let head_tgt = head.tgt.as_deref().expect("n > 0");
        (
            Some(Box::new(glob_taut_compose(x, head_src, &restrict_body(false))?)),
            Some(Box::new(glob_taut_compose(x, head_tgt, &restrict_body(true))?)),
        )
    };
    Ok(HomCell { shape: result_shape, table, src, tgt })
}

/// Materialize `[B, A]` as a collection for shapes up to the node bound,
/// with a dictionary from cell names back to the hom cells.
pub fn hom_collection(
    b: &Collection,
    a: &Collection,
    dim: usize,
    max_nodes: usize,
) -> Result<(Collection, BTreeMap<(usize, String), HomCell>), GlobError> {
    let mut cells: Vec<Vec<String>> = vec![Vec::new(); dim + 1];
    let mut src: Vec<BTreeMap<String, String>> = vec![BTreeMap::new(); dim + 1];
    let mut tgt: Vec<BTreeMap<String, String>> = vec![BTreeMap::new(); dim + 1];
    let mut arity = BTreeMap::new();
    let mut dict = BTreeMap::new();
    for k in 0..=dim {
        for shape in PastingDiagram::enumerate(k, max_nodes) {
            for cell in glob_hom_fiber(b, a, &shape)? {
                let name = cell.canonical_name();
                cells[k].push(name.clone());
                arity.insert((k, name.clone()), shape.clone());
                if k > 0 {
                    let s = cell.src.as_deref().expect("k > 0");
                    let t = cell.tgt.as_deref().expect("k > 0");
                    src[k].insert(name.clone(), s.canonical_name());
                    tgt[k].insert(name.clone(), t.canonical_name());
                }
                dict.insert((k, name), cell);
            }
        }
    }
    let carrier = TruncGlobSet::new(dim, cells, src, tgt)?;
    let collection = Collection::new(carrier, arity)?;
    Ok((collection, dict))
}

/// Curry a collection map `F : A □ B -> C` into an assignment from the cells
/// of `A` to hom cells of `[B, C]`.
pub fn curry_coll(
    a: &Collection,
    tensor: &TensorColl,
    f: &GlobMap,
) -> Result<BTreeMap<(usize, String), HomCell>, GlobError> {
    let mut out: BTreeMap<(usize, String), HomCell> = BTreeMap::new();
    for k in 0..=a.dim() {
        for head in a.carrier.cells(k) {
            let shape = a.arity_of(k, head)?.clone();
            let mut table = BTreeMap::new();
            for (key, cell) in &tensor.cells {
                if key.0 == k && cell.head == (k, head.clone()) {
                    let value = f.apply(k, &key.1)?.to_string();
                    table.insert(cell.body.clone(), value);
                }
            }
            let (src, tgt) = if k == 0 {
                (None, None)
            } else {
                let s = a.carrier.src_of(k, head)?;
                let t = a.carrier.tgt_of(k, head)?;
                let s_cell = out
                    .get(&(k - 1, s.to_string()))
                    .ok_or_else(|| GlobError::Malformed(format!("missing curried {s}")))?;
                let t_cell = out
                    .get(&(k - 1, t.to_string()))
                    .ok_or_else(|| GlobError::Malformed(format!("missing curried {t}")))?;
                (Some(Box::new(s_cell.clone())), Some(Box::new(t_cell.clone())))
            };
            out.insert((k, head.clone()), HomCell { shape, table, src, tgt });
        }
    }
    Ok(out)
}

/// Rebuild a collection map `A □ B -> C` from an assignment into `[B, C]`.
pub fn uncurry_coll(
    a: &Collection,
    tensor: &TensorColl,
    assignment: &BTreeMap<(usize, String), HomCell>,
) -> Result<GlobMap, GlobError> {
    let dim = a.dim();
    let mut map: Vec<BTreeMap<String, String>> = vec![BTreeMap::new(); dim + 1];
    for ((k, name), TensorCell { head, body }) in &tensor.cells {
        let h = assignment
            .get(head)
            .ok_or_else(|| GlobError::Malformed(format!("no assignment for {}", head.1)))?;
        map[*k].insert(name.clone(), h.apply(body)?.to_string());
    }
    Ok(GlobMap { map })
}

/// All collection maps between two collections.
pub fn enumerate_collection_maps(x: &Collection, y: &Collection) -> Vec<GlobMap> {
    crate::glob::enumerate_glob_maps(&x.carrier, &y.carrier)
        .into_iter()
        .filter(|f| {
            (0..=x.dim()).all(|k| {
                x.carrier.cells(k).iter().all(|c| {
                    let img = f.apply(k, c).expect("total");
                    x.arity_of(k, c).ok() == y.arity_of(k, img).ok()
                })
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_collection_fibers_are_singletons() {
        let u = Collection::unit(2);
        for k in 0..=2 {
            let shape = PastingDiagram::globe(k);
            let fiber = glob_hom_fiber(&u, &u, &shape).unwrap();
            assert_eq!(fiber.len(), 1, "globe({k})");
        }
    }

    #[test]
    fn empty_target_fiber_is_empty() {
        // length-2 path shape, target collection with no 1-cells of the
        // composite arity
        let path2 = PastingDiagram::from_grid(&[0, 0], 1).unwrap();
        let b = Collection::unit(1);
        let a = Collection::degenerate(TruncGlobSet::terminal(1));
        // bodies over path2 by unit cells have composite arity path-2; the
        // degenerate collection has no such 1-cell
        let fiber = glob_hom_fiber(&b, &a, &path2).unwrap();
        assert!(fiber.is_empty());
        assert_eq!(hom_table_count(&b, &a, &path2).unwrap(), 0);
    }

    #[test]
    fn taut_unit_is_identity_on_globe_labelings() {
        let x = Collection::degenerate(TruncGlobSet::terminal(1));
        for k in 0..=1 {
            let u = glob_taut_unit(&x, k);
            for (body, value) in &u.table {
                let top = CellId { path: vec![0; k], joint: 0 };
                assert_eq!(&body.labels[&top], value);
            }
        }
    }

    #[test]
    fn taut_unit_is_two_sided_for_compose() {
        let x = Collection::degenerate(TruncGlobSet::terminal(2));
        for k in 0..=2 {
            let fiber =
                glob_hom_fiber(&x, &x, &PastingDiagram::globe(k)).unwrap();
            for g in &fiber {
                // right unit: body of units over the globe shape
                let body: BTreeMap<CellId, HomCell> = g
                    .shape
                    .tree()
                    .cells()
                    .into_iter()
                    .map(|c| {
                        let u = glob_taut_unit(&x, c.dim());
                        (c, u)
                    })
                    .collect();
                let composed = glob_taut_compose(&x, g, &body).unwrap();
                assert_eq!(&composed, g);
            }
        }
    }

    #[test]
    fn degenerate_pair_fiber_counts_match_formula() {
        // set-like collection: two 0-cells, degenerate higher cells
        let g = TruncGlobSet::new(
            1,
            vec![vec!["x".into(), "y".into()], vec!["ix".into(), "iy".into()]],
            vec![
                BTreeMap::new(),
                [("ix".to_string(), "x".to_string()), ("iy".to_string(), "y".to_string())]
                    .into_iter()
                    .collect(),
            ],
            vec![
                BTreeMap::new(),
                [("ix".to_string(), "x".to_string()), ("iy".to_string(), "y".to_string())]
                    .into_iter()
                    .collect(),
            ],
        )
        .unwrap();
        let x = Collection::degenerate(g);
        let tower = PastingDiagram::id_tower(1);
        let fiber = glob_hom_fiber(&x, &x, &tower).unwrap();
        // labelings of the degenerate 1-shape are the two 0-cells; the top
        // tables are functions into degenerate 1-cells over matching points
        let count = hom_table_count(&x, &x, &tower).unwrap();
        assert_eq!(count, 4);
        // towers multiply in the source/target choices of dimension 0
        assert!(fiber.len() >= count);
        for c in &fiber {
            assert_eq!(c.table.len(), 2);
        }
    }
}
