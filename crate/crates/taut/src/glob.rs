//! Dimension-truncated globular sets, globular maps, and bounded views of
//! the free strict omega-category monad: labelings of pasting shapes by
//! cells (elements of `T(G)`) and the substitution that flattens labeled
//! diagrams of labeled diagrams (`mu`).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::report::CheckReport;
use crate::tree::{
    substitute_full, CellId, DiagramOfDiagrams, PastingDiagram, Tree, TreeError,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GlobError {
    #[error("unknown {0}-cell {1}")]
    UnknownCell(usize, String),
    #[error("{0}")]
    Tree(#[from] TreeError),
    #[error("{0}")]
    Malformed(String),
}

/// A globular set truncated at a finite dimension.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TruncGlobSet {
    dim: usize,
    /// `cells[k]` lists the k-cells in canonical order.
    cells: Vec<Vec<String>>,
    /// `src[k]` maps k-cells to (k-1)-cells, for `1 <= k <= dim`.
    src: Vec<BTreeMap<String, String>>,
    tgt: Vec<BTreeMap<String, String>>,
}

impl TruncGlobSet {
    pub fn new(
        dim: usize,
        mut cells: Vec<Vec<String>>,
        src: Vec<BTreeMap<String, String>>,
        tgt: Vec<BTreeMap<String, String>>,
    ) -> Result<TruncGlobSet, GlobError> {
        cells.resize(dim + 1, Vec::new());
        for level in &mut cells {
            level.sort();
            level.dedup();
        }
        let mut src = src;
        let mut tgt = tgt;
        src.resize(dim + 1, BTreeMap::new());
        tgt.resize(dim + 1, BTreeMap::new());
        let g = TruncGlobSet { dim, cells, src, tgt };
        for k in 1..=dim {
            for c in &g.cells[k] {
                let s = g.src_of(k, c)?;
                let t = g.tgt_of(k, c)?;
                if !g.cells[k - 1].iter().any(|x| x == s) {
                    return Err(GlobError::UnknownCell(k - 1, s.to_string()));
                }
                if !g.cells[k - 1].iter().any(|x| x == t) {
                    return Err(GlobError::UnknownCell(k - 1, t.to_string()));
                }
            }
        }
        Ok(g)
    }

    /// One cell in every dimension up to `dim`.
    pub fn terminal(dim: usize) -> TruncGlobSet {
        let cells = (0..=dim).map(|k| vec![format!("u{k}")]).collect();
        let mut src = vec![BTreeMap::new()];
        let mut tgt = vec![BTreeMap::new()];
        for k in 1..=dim {
            src.push([(format!("u{k}"), format!("u{}", k - 1))].into_iter().collect());
            tgt.push([(format!("u{k}"), format!("u{}", k - 1))].into_iter().collect());
        }
        TruncGlobSet { dim, cells, src, tgt }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cells(&self, k: usize) -> &[String] {
        self.cells.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn cell_count(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn src_of(&self, k: usize, cell: &str) -> Result<&str, GlobError> {
        self.src[k]
            .get(cell)
            .map(String::as_str)
            .ok_or_else(|| GlobError::UnknownCell(k, cell.to_string()))
    }

    pub fn tgt_of(&self, k: usize, cell: &str) -> Result<&str, GlobError> {
        self.tgt[k]
            .get(cell)
            .map(String::as_str)
            .ok_or_else(|| GlobError::UnknownCell(k, cell.to_string()))
    }

    /// Verify the globular identities at every cell.
    pub fn check_globular(&self) -> CheckReport {
        let mut checked = 0;
        for k in 2..=self.dim {
            for c in &self.cells[k] {
                checked += 1;
                let (Ok(s), Ok(t)) = (self.src_of(k, c), self.tgt_of(k, c)) else {
                    return CheckReport::error("globular-identities", format!("missing boundary at {c}"));
                };
                let pairs = [
                    (self.src_of(k - 1, s), self.src_of(k - 1, t), "s∘s = s∘t"),
                    (self.tgt_of(k - 1, s), self.tgt_of(k - 1, t), "t∘s = t∘t"),
                ];
                for (a, b, law) in pairs {
                    match (a, b) {
                        (Ok(a), Ok(b)) if a == b => {}
                        (Ok(a), Ok(b)) => {
                            return CheckReport::fail(
                                "globular-identities",
                                format!("{law} fails at {k}-cell {c}: {a} vs {b}"),
                                checked,
                            )
                        }
                        _ => {
                            return CheckReport::error(
                                "globular-identities",
                                format!("missing boundary below {c}"),
                            )
                        }
                    }
                }
            }
        }
        CheckReport::pass("globular-identities", checked)
    }

    /// The pasting scheme of a diagram as a globular set, with cells named by
    /// their addresses.
    pub fn realize(shape: &PastingDiagram) -> TruncGlobSet {
        let tree = shape.tree();
        let mut cells: Vec<Vec<String>> = vec![Vec::new(); shape.dim() + 1];
        let mut src: Vec<BTreeMap<String, String>> = vec![BTreeMap::new(); shape.dim() + 1];
        let mut tgt: Vec<BTreeMap<String, String>> = vec![BTreeMap::new(); shape.dim() + 1];
        for cell in tree.cells() {
            let k = cell.dim();
            cells[k].push(cell.to_string());
            if let (Some(s), Some(t)) = (cell.src(), cell.tgt()) {
                src[k].insert(cell.to_string(), s.to_string());
                tgt[k].insert(cell.to_string(), t.to_string());
            }
        }
        TruncGlobSet::new(shape.dim(), cells, src, tgt).expect("schemes are globular")
    }
}

/// A dimension-wise cell assignment between globular sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GlobMap {
    pub map: Vec<BTreeMap<String, String>>,
}

impl GlobMap {
    pub fn apply(&self, k: usize, cell: &str) -> Result<&str, GlobError> {
        self.map
            .get(k)
            .and_then(|m| m.get(cell))
            .map(String::as_str)
            .ok_or_else(|| GlobError::UnknownCell(k, cell.to_string()))
    }

    pub fn identity(g: &TruncGlobSet) -> GlobMap {
        GlobMap {
            map: (0..=g.dim())
                .map(|k| g.cells(k).iter().map(|c| (c.clone(), c.clone())).collect())
                .collect(),
        }
    }

    /// Check naturality with respect to sources and targets.
    pub fn check(&self, g: &TruncGlobSet, h: &TruncGlobSet) -> CheckReport {
        let mut checked = 0;
        for k in 0..=g.dim() {
            for c in g.cells(k) {
                checked += 1;
                let img = match self.apply(k, c) {
                    Ok(i) => i,
                    Err(e) => return CheckReport::error("globular-map", e.to_string()),
                };
                if !h.cells(k).iter().any(|x| x == img) {
                    return CheckReport::fail(
                        "globular-map",
                        format!("{k}-cell {c} maps outside the target"),
                        checked,
                    );
                }
                if k > 0 {
                    let want_s = self
                        .apply(k - 1, g.src_of(k, c).expect("validated"))
                        .unwrap_or("?");
                    let want_t = self
                        .apply(k - 1, g.tgt_of(k, c).expect("validated"))
                        .unwrap_or("?");
                    let got_s = h.src_of(k, img).unwrap_or("?");
                    let got_t = h.tgt_of(k, img).unwrap_or("?");
                    if want_s != got_s || want_t != got_t {
                        return CheckReport::fail(
                            "globular-map",
                            format!("boundaries not preserved at {k}-cell {c}"),
                            checked,
                        );
                    }
                }
            }
        }
        CheckReport::pass("globular-map", checked)
    }
}

/// All globular maps between two truncated globular sets, by dimension-wise
/// assignment with boundary pruning.
pub fn enumerate_glob_maps(g: &TruncGlobSet, h: &TruncGlobSet) -> Vec<GlobMap> {
    let dim = g.dim().max(h.dim());
    let mut partials: Vec<Vec<BTreeMap<String, String>>> = vec![Vec::new()];
    for k in 0..=dim {
        let mut next = Vec::new();
        for partial in &partials {
            let mut level_maps: Vec<BTreeMap<String, String>> = vec![BTreeMap::new()];
            for c in g.cells(k) {
                let mut extended = Vec::new();
                for lm in &level_maps {
                    for cand in h.cells(k) {
                        if k > 0 {
                            let want_s =
                                &partial[k - 1][g.src_of(k, c).expect("validated")];
                            let want_t =
                                &partial[k - 1][g.tgt_of(k, c).expect("validated")];
                            if h.src_of(k, cand).expect("validated") != want_s
                                || h.tgt_of(k, cand).expect("validated") != want_t
                            {
                                continue;
                            }
                        }
                        let mut m = lm.clone();
                        m.insert(c.clone(), cand.clone());
                        extended.push(m);
                    }
                }
                level_maps = extended;
            }
            for lm in level_maps {
                let mut p = partial.clone();
                p.push(lm);
                next.push(p);
            }
        }
        partials = next;
    }
    partials.into_iter().map(|map| GlobMap { map }).collect()
}

/// A cell of `T(G)`: a pasting shape together with a globular labeling of its
/// scheme by cells of `G`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LabeledDiagram {
    pub shape: PastingDiagram,
    pub labels: BTreeMap<CellId, String>,
}

impl LabeledDiagram {
    /// The image of a single cell under the unit of the monad: a globe
    /// labeled by the cell and its iterated boundaries.
    pub fn single(g: &TruncGlobSet, k: usize, cell: &str) -> Result<LabeledDiagram, GlobError> {
        if !g.cells(k).iter().any(|c| c == cell) {
            return Err(GlobError::UnknownCell(k, cell.to_string()));
        }
        let shape = PastingDiagram::globe(k);
        let mut labels = BTreeMap::new();
        // the globe's j-cells are (0^j, 0) and, on the target side, (0^j, 1)
        let mut s_chain = cell.to_string();
        let mut t_chain = cell.to_string();
        for j in (0..=k).rev() {
            let path = vec![0usize; j];
            labels.insert(CellId { path: path.clone(), joint: 0 }, s_chain.clone());
            if j < k {
                labels.insert(CellId { path, joint: 1 }, t_chain.clone());
            }
            if j > 0 {
                s_chain = g.src_of(j, &s_chain)?.to_string();
                t_chain = g.tgt_of(j, &t_chain)?.to_string();
            }
        }
        Ok(LabeledDiagram { shape, labels })
    }

    /// Degenerate cell: the iterated identity on a 0-cell, in dimension `k`.
    pub fn degenerate(g: &TruncGlobSet, k: usize, zero_cell: &str) -> Result<LabeledDiagram, GlobError> {
        if !g.cells(0).iter().any(|c| c == zero_cell) {
            return Err(GlobError::UnknownCell(0, zero_cell.to_string()));
        }
        let mut labels = BTreeMap::new();
        labels.insert(CellId { path: vec![], joint: 0 }, zero_cell.to_string());
        Ok(LabeledDiagram { shape: PastingDiagram::id_tower(k), labels })
    }

    pub fn dim(&self) -> usize {
        self.shape.dim()
    }

    /// Boundary restriction of the labels; `side` selects source or target
    /// labels at the cut dimension.
    fn restrict(&self, target_side: bool) -> LabeledDiagram {
        let n = self.shape.dim();
        assert!(n > 0, "0-dimensional cells have no boundary");
        let bshape = self.shape.boundary(n - 1);
        let embed = boundary_embedding(self.shape.tree(), n - 1, target_side);
        let labels = embed
            .into_iter()
            .map(|(c, image)| {
                let l = self.labels.get(&image).expect("labels total").clone();
                (c, l)
            })
            .collect();
        LabeledDiagram { shape: bshape, labels }
    }

    pub fn src(&self) -> Option<LabeledDiagram> {
        if self.shape.dim() == 0 {
            None
        } else {
            Some(self.restrict(false))
        }
    }

    pub fn tgt(&self) -> Option<LabeledDiagram> {
        if self.shape.dim() == 0 {
            None
        } else {
            Some(self.restrict(true))
        }
    }

    /// Apply a globular map to the labels (the functorial action on cells of
    /// `T(G)`).
    pub fn map_labels(&self, f: &GlobMap) -> Result<LabeledDiagram, GlobError> {
        let labels = self
            .labels
            .iter()
            .map(|(c, l)| Ok((c.clone(), f.apply(c.dim(), l)?.to_string())))
            .collect::<Result<_, GlobError>>()?;
        Ok(LabeledDiagram { shape: self.shape.clone(), labels })
    }
}

/// Embedding of the cells of `truncate(tree, k)` into the cells of `tree`;
/// at the cut dimension the source side picks the bottom joint, the target
/// side the top joint.
pub fn boundary_embedding(tree: &Tree, k: usize, target_side: bool) -> BTreeMap<CellId, CellId> {
    let truncated = tree.truncate(k);
    let mut out = BTreeMap::new();
    for cell in truncated.cells() {
        if cell.dim() < k {
            out.insert(cell.clone(), cell);
        } else {
            debug_assert_eq!(cell.joint, 0, "cut-level nodes are leaves after truncation");
            let node = node_at(tree, &cell.path);
            let image = if target_side {
                CellId { path: cell.path.clone(), joint: node.children.len() }
            } else {
                cell.clone()
            };
            out.insert(cell, image);
        }
    }
    out
}

fn node_at<'a>(tree: &'a Tree, path: &[usize]) -> &'a Tree {
    let mut t = tree;
    for &i in path {
        t = &t.children[i];
    }
    t
}

/// Complete a labeling from values on the leaf cells of a shape, filling
/// boundary cells with iterated sources and targets. Fails when two leaves
/// force different labels on a shared cell.
pub fn labeling_from_leaf_labels(
    shape: &PastingDiagram,
    g: &TruncGlobSet,
    leaf_labels: &BTreeMap<CellId, String>,
) -> Result<BTreeMap<CellId, String>, GlobError> {
    let mut labels: BTreeMap<CellId, String> = BTreeMap::new();
    let insert = |cell: CellId, value: String, labels: &mut BTreeMap<CellId, String>| {
        match labels.get(&cell) {
            Some(existing) if *existing != value => Err(GlobError::Malformed(format!(
                "cell {cell} receives both {existing} and {value}"
            ))),
            _ => {
                labels.insert(cell, value);
                Ok(())
            }
        }
    };
    for cell in shape.tree().leaf_cells() {
        let value = leaf_labels
            .get(&cell)
            .ok_or_else(|| GlobError::Malformed(format!("missing label for {cell}")))?;
        let mut c = cell.clone();
        let mut v = value.clone();
        loop {
            insert(c.clone(), v.clone(), &mut labels)?;
            let (Some(s), Some(t)) = (c.src(), c.tgt()) else { break };
            let sv = g.src_of(c.dim(), &v)?.to_string();
            let tv = g.tgt_of(c.dim(), &v)?.to_string();
            insert(t, tv, &mut labels)?;
            c = s;
            v = sv;
        }
    }
    Ok(labels)
}

/// All boundary-compatible labelings of a shape by cells of `g` (the fiber
/// of `T(g)` over the shape), in canonical order.
pub fn labelings(shape: &PastingDiagram, g: &TruncGlobSet) -> Vec<LabeledDiagram> {
    let cells = shape.tree().cells();
    let mut partials: Vec<BTreeMap<CellId, String>> = vec![BTreeMap::new()];
    for cell in &cells {
        let k = cell.dim();
        let mut next = Vec::new();
        for partial in &partials {
            for cand in g.cells(k) {
                if let (Some(s), Some(t)) = (cell.src(), cell.tgt()) {
                    if g.src_of(k, cand).expect("validated") != partial[&s]
                        || g.tgt_of(k, cand).expect("validated") != partial[&t]
                    {
                        continue;
                    }
                }
                let mut m = partial.clone();
                m.insert(cell.clone(), cand.clone());
                next.push(m);
            }
        }
        partials = next;
    }
    partials
        .into_iter()
        .map(|labels| LabeledDiagram { shape: shape.clone(), labels })
        .collect()
}

/// Bounded view of `T(G)`: every labeled diagram of dimension `k` with a
/// shape of at most `max_nodes` nodes.
pub fn bounded_cells(g: &TruncGlobSet, k: usize, max_nodes: usize) -> Vec<LabeledDiagram> {
    PastingDiagram::enumerate(k, max_nodes)
        .iter()
        .flat_map(|shape| labelings(shape, g))
        .collect()
}

/// A labeled diagram of labeled diagrams: a bounded cell of `T²(G)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NestedDiagram {
    pub shape: PastingDiagram,
    pub labels: BTreeMap<CellId, LabeledDiagram>,
}

impl NestedDiagram {
    pub fn validate(&self) -> Result<(), GlobError> {
        for cell in self.shape.tree().cells() {
            let label = self
                .labels
                .get(&cell)
                .ok_or_else(|| GlobError::Malformed(format!("missing label at {cell}")))?;
            if label.dim() != cell.dim() {
                return Err(GlobError::Malformed(format!(
                    "label at {cell} has dimension {}, expected {}",
                    label.dim(),
                    cell.dim()
                )));
            }
            if let (Some(s), Some(t)) = (cell.src(), cell.tgt()) {
                if self.labels.get(&s) != label.src().as_ref()
                    || self.labels.get(&t) != label.tgt().as_ref()
                {
                    return Err(GlobError::Malformed(format!(
                        "labels around {cell} are not globular"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The monad multiplication: paste the inner diagrams together along the
    /// outer shape, carrying the labels along.
    pub fn flatten(&self) -> Result<LabeledDiagram, GlobError> {
        self.validate()?;
        let shape_labels: BTreeMap<CellId, PastingDiagram> = self
            .labels
            .iter()
            .map(|(c, l)| (c.clone(), l.shape.clone()))
            .collect();
        let dd = DiagramOfDiagrams::new(self.shape.clone(), shape_labels)?;
        let (result_shape, embeddings) = substitute_full(&dd)?;
        let mut labels: BTreeMap<CellId, String> = BTreeMap::new();
        for (leaf, embed) in &embeddings {
            let inner = &self.labels[leaf];
            for (inner_cell, result_cell) in embed {
                let value = inner.labels[inner_cell].clone();
                match labels.get(result_cell) {
                    Some(existing) if *existing != value => {
                        return Err(GlobError::Malformed(format!(
                            "pasting produced conflicting labels at {result_cell}"
                        )))
                    }
                    _ => {
                        labels.insert(result_cell.clone(), value);
                    }
                }
            }
        }
        for cell in result_shape.tree().cells() {
            if !labels.contains_key(&cell) {
                return Err(GlobError::Malformed(format!(
                    "pasting left cell {cell} unlabeled"
                )));
            }
        }
        Ok(LabeledDiagram { shape: result_shape, labels })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_arrows() -> TruncGlobSet {
        // 0-cells x, y, z; 1-cells f: x -> y, g: y -> z, h: x -> x
        TruncGlobSet::new(
            1,
            vec![
                vec!["x".into(), "y".into(), "z".into()],
                vec!["f".into(), "g".into(), "h".into()],
            ],
            vec![
                BTreeMap::new(),
                [("f".to_string(), "x".to_string()), ("g".to_string(), "y".to_string()), ("h".to_string(), "x".to_string())]
                    .into_iter()
                    .collect(),
            ],
            vec![
                BTreeMap::new(),
                [("f".to_string(), "y".to_string()), ("g".to_string(), "z".to_string()), ("h".to_string(), "x".to_string())]
                    .into_iter()
                    .collect(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn terminal_is_globular() {
        for d in 0..=3 {
            assert!(TruncGlobSet::terminal(d).check_globular().passed());
        }
    }

    #[test]
    fn broken_globular_identity_detected() {
        // one 2-cell whose source and target 1-cells are not parallel
        let g = TruncGlobSet::new(
            2,
            vec![
                vec!["x".into(), "y".into()],
                vec!["f".into(), "g".into()],
                vec!["m".into()],
            ],
            vec![
                BTreeMap::new(),
                [("f".to_string(), "x".to_string()), ("g".to_string(), "y".to_string())]
                    .into_iter()
                    .collect(),
                [("m".to_string(), "f".to_string())].into_iter().collect(),
            ],
            vec![
                BTreeMap::new(),
                [("f".to_string(), "y".to_string()), ("g".to_string(), "y".to_string())]
                    .into_iter()
                    .collect(),
                [("m".to_string(), "g".to_string())].into_iter().collect(),
            ],
        )
        .unwrap();
        let report = g.check_globular();
        assert!(!report.passed());
        assert!(report.witness.unwrap().contains('m'));
    }

    #[test]
    fn realize_globe_has_two_cells_per_lower_dim() {
        let g = TruncGlobSet::realize(&PastingDiagram::globe(2));
        assert_eq!(g.cells(0).len(), 2);
        assert_eq!(g.cells(1).len(), 2);
        assert_eq!(g.cells(2).len(), 1);
        assert!(g.check_globular().passed());
    }

    #[test]
    fn labelings_of_globe_are_cells() {
        let g = two_arrows();
        let shape = PastingDiagram::globe(1);
        assert_eq!(labelings(&shape, &g).len(), 3);
        let pt = PastingDiagram::point();
        assert_eq!(labelings(&pt, &g).len(), 3);
    }

    #[test]
    fn labelings_of_path_are_composable_pairs() {
        let g = two_arrows();
        let path2 = PastingDiagram::from_grid(&[0, 0], 1).unwrap();
        let labs = labelings(&path2, &g);
        // oracle: pairs of 1-cells with matching endpoints
        let mut pairs = Vec::new();
        for e1 in g.cells(1) {
            for e2 in g.cells(1) {
                if g.tgt_of(1, e1).unwrap() == g.src_of(1, e2).unwrap() {
                    pairs.push((e1.clone(), e2.clone()));
                }
            }
        }
        assert_eq!(pairs.len(), 3); // (f,g), (h,f), (h,h)
        let from_labelings: Vec<(String, String)> = labs
            .iter()
            .map(|l| {
                (
                    l.labels[&CellId { path: vec![0], joint: 0 }].clone(),
                    l.labels[&CellId { path: vec![1], joint: 0 }].clone(),
                )
            })
            .collect();
        let mut sorted = from_labelings.clone();
        sorted.sort();
        pairs.sort();
        assert_eq!(sorted, pairs);
    }

    #[test]
    fn labelings_need_cells_in_every_dimension() {
        let empty1 = TruncGlobSet::new(1, vec![vec!["x".into()]], vec![], vec![]).unwrap();
        let shape = PastingDiagram::globe(1);
        assert!(labelings(&shape, &empty1).is_empty());
    }

    #[test]
    fn single_cell_unit_has_globe_shape() {
        let g = two_arrows();
        let d = LabeledDiagram::single(&g, 1, "f").unwrap();
        assert_eq!(d.shape, PastingDiagram::globe(1));
        let s = d.src().unwrap();
        assert_eq!(s.labels[&CellId { path: vec![], joint: 0 }], "x");
        let t = d.tgt().unwrap();
        assert_eq!(t.labels[&CellId { path: vec![], joint: 0 }], "y");
    }

    #[test]
    fn flatten_concatenates_labeled_paths() {
        let g = two_arrows();
        let path2 = PastingDiagram::from_grid(&[0, 0], 1).unwrap();
        // outer: a single 1-globe labeled... the outer is a shape over T(G):
        // take outer = globe(1) whose 1-cell is labeled by the path (f, g)
        let fg = labelings(&path2, &g)
            .into_iter()
            .find(|l| l.labels.values().any(|v| v == "f") && l.labels.values().any(|v| v == "g"))
            .unwrap();
        let outer = PastingDiagram::globe(1);
        let mut labels = BTreeMap::new();
        labels.insert(CellId { path: vec![0], joint: 0 }, fg.clone());
        labels.insert(
            CellId { path: vec![], joint: 0 },
            fg.src().unwrap(),
        );
        labels.insert(
            CellId { path: vec![], joint: 1 },
            fg.tgt().unwrap(),
        );
        let nested = NestedDiagram { shape: outer, labels };
        let flat = nested.flatten().unwrap();
        assert_eq!(flat, fg);
    }

    #[test]
    fn globular_maps_enumerate_and_check() {
        let g = two_arrows();
        let id = GlobMap::identity(&g);
        assert!(id.check(&g, &g).passed());
        let terminal = TruncGlobSet::terminal(1);
        let maps = enumerate_glob_maps(&g, &terminal);
        assert_eq!(maps.len(), 1);
        assert!(maps[0].check(&g, &terminal).passed());
    }
}
