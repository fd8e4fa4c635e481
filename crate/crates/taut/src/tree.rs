//! Globular pasting diagrams encoded as finite rooted planar trees.
//!
//! A tree of height `h` names a pasting scheme whose top cells have dimension
//! `h`: the root's children are the 1-dimensional segments, their children the
//! 2-cells stacked over each segment, and so on. The same tree viewed in a
//! higher ambient dimension is the iterated identity on that scheme, so a
//! [`PastingDiagram`] is a tree together with the dimension it is read in.
//!
//! For dimensions `<= 2` there is a second, independent encoding as a list of
//! column heights (`[2,3]` = two segments carrying 2 and 3 two-cells). The
//! list-based substitution in [`grid`] is kept deliberately separate from the
//! tree-grafting substitution so the two can be played against each other.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("height {height} exceeds dimension {dim}")]
    HeightExceedsDim { height: usize, dim: usize },
    #[error("incompatible boundaries: {0}")]
    IncompatibleBoundaries(String),
    #[error("missing label for cell {0}")]
    MissingLabel(String),
    #[error("label dimension mismatch at cell {cell}: shape is {got}-dimensional, expected {want}")]
    LabelDim { cell: String, got: usize, want: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no grid form in dimension {0}")]
    GridDim(usize),
}

/// A finite rooted planar tree. The order of children is part of the data.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Tree {
    pub children: Vec<Tree>,
}

impl Tree {
    pub fn leaf() -> Tree {
        Tree { children: Vec::new() }
    }

    pub fn node(children: Vec<Tree>) -> Tree {
        Tree { children }
    }

    /// A linear chain of the given height (the shape of a single globe).
    pub fn chain(height: usize) -> Tree {
        let mut t = Tree::leaf();
        for _ in 0..height {
            t = Tree::node(vec![t]);
        }
        t
    }

    pub fn height(&self) -> usize {
        self.children.iter().map(|c| c.height() + 1).max().unwrap_or(0)
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(Tree::node_count).sum::<usize>()
    }

    /// Drop every node strictly below depth `k`.
    pub fn truncate(&self, k: usize) -> Tree {
        if k == 0 {
            Tree::leaf()
        } else {
            Tree::node(self.children.iter().map(|c| c.truncate(k - 1)).collect())
        }
    }

    fn subtree(&self, path: &[usize]) -> Option<&Tree> {
        let mut t = self;
        for &i in path {
            t = t.children.get(i)?;
        }
        Some(t)
    }

    /// All cells of the pasting scheme named by this tree, in canonical order
    /// (by dimension, then by address). A node at address `p` with `q`
    /// children contributes the cells `(p, 0) ... (p, q)` of dimension `|p|`.
    pub fn cells(&self) -> Vec<CellId> {
        let mut out = Vec::new();
        let mut frontier = vec![(Vec::new(), self)];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (path, node) in &frontier {
                for j in 0..=node.children.len() {
                    out.push(CellId { path: path.clone(), joint: j });
                }
                for (i, c) in node.children.iter().enumerate() {
                    let mut p = path.clone();
                    p.push(i);
                    next.push((p, c));
                }
            }
            frontier = next;
        }
        out
    }

    pub fn cells_of_dim(&self, k: usize) -> Vec<CellId> {
        self.cells().into_iter().filter(|c| c.dim() == k).collect()
    }

    /// Cells that are not forced as boundaries of other cells: `(p, 0)` for
    /// every leaf node `p`. A labeling of the scheme is determined by its
    /// values on these.
    pub fn leaf_cells(&self) -> Vec<CellId> {
        self.cells()
            .into_iter()
            .filter(|c| {
                let node = self.subtree(&c.path).expect("cell address in tree");
                node.children.is_empty() && c.joint == 0
            })
            .collect()
    }

    /// All trees with at most `max_nodes` nodes and height at most `max_height`,
    /// in canonical order (node count, then structural order).
    pub fn enumerate(max_height: usize, max_nodes: usize) -> Vec<Tree> {
        let mut out = Vec::new();
        for n in 1..=max_nodes {
            out.extend(Self::enumerate_exact(max_height, n));
        }
        out
    }

    fn enumerate_exact(max_height: usize, nodes: usize) -> Vec<Tree> {
        if nodes == 0 {
            return Vec::new();
        }
        if nodes == 1 {
            return vec![Tree::leaf()];
        }
        if max_height == 0 {
            return Vec::new();
        }
        // Distribute nodes-1 among an ordered list of children.
        let mut out = Vec::new();
        for parts in compositions(nodes - 1) {
            let per_child: Vec<Vec<Tree>> = parts
                .iter()
                .map(|&p| Self::enumerate_exact(max_height - 1, p))
                .collect();
            if per_child.iter().any(|v| v.is_empty()) {
                continue;
            }
            let mut stack = vec![Vec::new()];
            for options in &per_child {
                let mut next = Vec::new();
                for prefix in &stack {
                    for opt in options {
                        let mut p: Vec<Tree> = prefix.clone();
                        p.push(opt.clone());
                        next.push(p);
                    }
                }
                stack = next;
            }
            out.extend(stack.into_iter().map(Tree::node));
        }
        out.sort();
        out
    }
}

/// Ordered lists of positive integers summing to `n` (compositions of `n`).
fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Address of a cell in the pasting scheme of a tree: the path to a node plus
/// a joint index. The cell's dimension is the path length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellId {
    pub path: Vec<usize>,
    pub joint: usize,
}

impl CellId {
    pub fn dim(&self) -> usize {
        self.path.len()
    }

    /// Source boundary cell; `None` for 0-cells.
    pub fn src(&self) -> Option<CellId> {
        let (&last, rest) = self.path.split_last()?;
        Some(CellId { path: rest.to_vec(), joint: last })
    }

    /// Target boundary cell; `None` for 0-cells.
    pub fn tgt(&self) -> Option<CellId> {
        let (&last, rest) = self.path.split_last()?;
        Some(CellId { path: rest.to_vec(), joint: last + 1 })
    }
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path: Vec<String> = self.path.iter().map(|i| i.to_string()).collect();
        write!(f, "{}:{}", path.join("."), self.joint)
    }
}

/// A cell of the free omega-category on the point: a tree read in an ambient
/// dimension at least its height.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PastingDiagram {
    tree: Tree,
    dim: usize,
}

impl PastingDiagram {
    pub fn new(tree: Tree, dim: usize) -> Result<PastingDiagram, TreeError> {
        let height = tree.height();
        if height > dim {
            return Err(TreeError::HeightExceedsDim { height, dim });
        }
        Ok(PastingDiagram { tree, dim })
    }

    pub fn point() -> PastingDiagram {
        PastingDiagram { tree: Tree::leaf(), dim: 0 }
    }

    /// The single globe of dimension `k`.
    pub fn globe(k: usize) -> PastingDiagram {
        PastingDiagram { tree: Tree::chain(k), dim: k }
    }

    /// The fully degenerate diagram of dimension `k` (iterated identity on
    /// the point).
    pub fn id_tower(k: usize) -> PastingDiagram {
        PastingDiagram { tree: Tree::leaf(), dim: k }
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Is this diagram an iterated identity of the single object?
    pub fn is_degenerate(&self) -> bool {
        self.tree == Tree::leaf()
    }

    /// The `k`-dimensional boundary shape (source and target coincide for
    /// diagram shapes). For `k >= dim` the diagram itself is returned.
    pub fn boundary(&self, k: usize) -> PastingDiagram {
        if k >= self.dim {
            return self.clone();
        }
        PastingDiagram { tree: self.tree.truncate(k), dim: k }
    }

    /// Same tree read one dimension lower; the boundary as a globular map.
    pub fn src(&self) -> Option<PastingDiagram> {
        if self.dim == 0 {
            None
        } else {
            Some(self.boundary(self.dim - 1))
        }
    }

    /// Raise the ambient dimension (the diagram becomes an identity cell).
    pub fn promote(&self, dim: usize) -> PastingDiagram {
        assert!(dim >= self.dim);
        PastingDiagram { tree: self.tree.clone(), dim }
    }

    /// Every pasting diagram of dimension exactly `dim` with at most
    /// `max_nodes` tree nodes, in canonical order.
    pub fn enumerate(dim: usize, max_nodes: usize) -> Vec<PastingDiagram> {
        Tree::enumerate(dim, max_nodes)
            .into_iter()
            .map(|t| PastingDiagram { tree: t, dim })
            .collect()
    }

    /// Grid form for dimensions `<= 2`: the list of column heights.
    pub fn grid(&self) -> Result<Vec<usize>, TreeError> {
        if self.tree.height() > 2 {
            return Err(TreeError::GridDim(self.dim));
        }
        Ok(self.tree.children.iter().map(|c| c.children.len()).collect())
    }

    pub fn from_grid(cols: &[usize], dim: usize) -> Result<PastingDiagram, TreeError> {
        let tree = Tree::node(
            cols.iter()
                .map(|&h| Tree::node(vec![Tree::leaf(); h]))
                .collect(),
        );
        PastingDiagram::new(tree, dim)
    }

    /// Parse a diagram literal: grid form `[2,3]`, `[]`, tree form
    /// `t(t(),t(t()))`, optionally suffixed `@d` to raise the dimension.
    pub fn parse(text: &str) -> Result<PastingDiagram, TreeError> {
        let text = text.trim();
        let (body, dim_suffix) = match text.rfind('@') {
            Some(i) => {
                let d: usize = text[i + 1..]
                    .trim()
                    .parse()
                    .map_err(|_| TreeError::Parse(format!("bad dimension suffix in `{text}`")))?;
                (text[..i].trim(), Some(d))
            }
            None => (text, None),
        };
        let tree = if body.starts_with('[') {
            if !body.ends_with(']') {
                return Err(TreeError::Parse(format!("unclosed grid literal `{body}`")));
            }
            let inner = &body[1..body.len() - 1];
            let cols: Vec<usize> = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|p| {
                        p.trim()
                            .parse::<usize>()
                            .map_err(|_| TreeError::Parse(format!("bad grid entry `{p}` in `{body}`")))
                    })
                    .collect::<Result<_, _>>()?
            };
            Tree::node(cols.iter().map(|&h| Tree::node(vec![Tree::leaf(); h])).collect())
        } else if body == "pt" {
            Tree::leaf()
        } else {
            let (tree, rest) = parse_tree(body)?;
            if !rest.trim().is_empty() {
                return Err(TreeError::Parse(format!("trailing input `{rest}`")));
            }
            tree
        };
        let dim = dim_suffix.unwrap_or_else(|| tree.height());
        PastingDiagram::new(tree, dim)
    }
}

fn parse_tree(input: &str) -> Result<(Tree, &str), TreeError> {
    let s = input.trim_start();
    let rest = s
        .strip_prefix('t')
        .and_then(|r| r.trim_start().strip_prefix('('))
        .ok_or_else(|| TreeError::Parse(format!("expected `t(` at `{s}`")))?;
    let mut rest = rest.trim_start();
    let mut children = Vec::new();
    loop {
        if let Some(r) = rest.strip_prefix(')') {
            return Ok((Tree::node(children), r));
        }
        if !children.is_empty() {
            rest = rest
                .strip_prefix(',')
                .ok_or_else(|| TreeError::Parse(format!("expected `,` or `)` at `{rest}`")))?
                .trim_start();
        }
        let (child, r) = parse_tree(rest)?;
        children.push(child);
        rest = r.trim_start();
    }
}

impl fmt::Display for PastingDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn tree_form(t: &Tree, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "t(")?;
            for (i, c) in t.children.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                tree_form(c, f)?;
            }
            write!(f, ")")
        }
        let height = self.tree.height();
        if height <= 2 {
            let cols = self.grid().expect("height checked");
            let parts: Vec<String> = cols.iter().map(|c| c.to_string()).collect();
            write!(f, "[{}]", parts.join(","))?;
            // minimal dimension a grid literal parses back to
            let minimal = height;
            if self.dim != minimal {
                write!(f, "@{}", self.dim)?;
            }
            Ok(())
        } else {
            tree_form(&self.tree, f)?;
            if self.dim != height {
                write!(f, "@{}", self.dim)?;
            }
            Ok(())
        }
    }
}

/// A pasting diagram of pasting diagrams: an outer shape together with a
/// boundary-compatible inner diagram for every cell of its scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramOfDiagrams {
    pub outer: PastingDiagram,
    pub labels: BTreeMap<CellId, PastingDiagram>,
}

impl DiagramOfDiagrams {
    pub fn new(
        outer: PastingDiagram,
        labels: BTreeMap<CellId, PastingDiagram>,
    ) -> Result<DiagramOfDiagrams, TreeError> {
        let dd = DiagramOfDiagrams { outer, labels };
        dd.validate()?;
        Ok(dd)
    }

    /// Build from labels on the leaf cells only; boundary labels are filled
    /// in as truncations. Fails if two leaves force different labels on a
    /// shared boundary cell.
    pub fn from_leaf_labels(
        outer: PastingDiagram,
        leaf_labels: &BTreeMap<CellId, PastingDiagram>,
    ) -> Result<DiagramOfDiagrams, TreeError> {
        let mut labels: BTreeMap<CellId, PastingDiagram> = BTreeMap::new();
        for cell in outer.tree().leaf_cells() {
            let label = leaf_labels
                .get(&cell)
                .ok_or_else(|| TreeError::MissingLabel(cell.to_string()))?;
            if label.dim() != cell.dim() {
                return Err(TreeError::LabelDim {
                    cell: cell.to_string(),
                    got: label.dim(),
                    want: cell.dim(),
                });
            }
            // propagate boundaries downward
            let mut c = cell.clone();
            let mut l = label.clone();
            loop {
                match labels.get(&c) {
                    Some(existing) if *existing != l => {
                        return Err(TreeError::IncompatibleBoundaries(format!(
                            "cell {c} receives both {existing} and {l}"
                        )))
                    }
                    _ => {
                        labels.insert(c.clone(), l.clone());
                    }
                }
                let (Some(s), Some(t)) = (c.src(), c.tgt()) else { break };
                let b = l.src().expect("dim matches cell dim > 0");
                match labels.get(&t) {
                    Some(existing) if *existing != b => {
                        return Err(TreeError::IncompatibleBoundaries(format!(
                            "cell {t} receives both {existing} and {b}"
                        )))
                    }
                    _ => {
                        labels.insert(t, b.clone());
                    }
                }
                c = s;
                l = b;
            }
        }
        DiagramOfDiagrams::new(outer, labels)
    }

    pub fn validate(&self) -> Result<(), TreeError> {
        for cell in self.outer.tree().cells() {
            let label = self
                .labels
                .get(&cell)
                .ok_or_else(|| TreeError::MissingLabel(cell.to_string()))?;
            if label.dim() != cell.dim() {
                return Err(TreeError::LabelDim {
                    cell: cell.to_string(),
                    got: label.dim(),
                    want: cell.dim(),
                });
            }
            if let (Some(s), Some(t)) = (cell.src(), cell.tgt()) {
                let b = label.src().expect("label dim = cell dim > 0");
                if self.labels.get(&s) != Some(&b) || self.labels.get(&t) != Some(&b) {
                    return Err(TreeError::IncompatibleBoundaries(format!(
                        "boundary labels of {cell} do not match the truncation of its label"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Cell-level embedding of one pasting scheme into another.
pub type CellMap = BTreeMap<CellId, CellId>;

/// Perform the pasting compositions of a diagram of diagrams, returning the
/// composite shape. At dimension 1 this is addition of path lengths.
pub fn substitute(dd: &DiagramOfDiagrams) -> Result<PastingDiagram, TreeError> {
    substitute_full(dd).map(|(p, _)| p)
}

/// As [`substitute`], but also report, for every leaf cell of the outer
/// scheme, where each cell of its inner diagram lands in the composite.
pub fn substitute_full(
    dd: &DiagramOfDiagrams,
) -> Result<(PastingDiagram, BTreeMap<CellId, CellMap>), TreeError> {
    dd.validate()?;
    let (tree, embeddings) = eval(&dd.outer.tree().clone(), Vec::new(), &dd.labels)?;
    Ok((PastingDiagram::new(tree, dd.outer.dim())?, embeddings))
}

fn eval(
    node: &Tree,
    path: Vec<usize>,
    labels: &BTreeMap<CellId, PastingDiagram>,
) -> Result<(Tree, BTreeMap<CellId, CellMap>), TreeError> {
    if node.children.is_empty() {
        let cell = CellId { path, joint: 0 };
        let label = labels
            .get(&cell)
            .ok_or_else(|| TreeError::MissingLabel(cell.to_string()))?;
        let identity: CellMap =
            label.tree().cells().into_iter().map(|c| (c.clone(), c)).collect();
        let mut embeddings = BTreeMap::new();
        embeddings.insert(cell, identity);
        return Ok((label.tree().clone(), embeddings));
    }
    let depth = path.len();
    let mut iter = node.children.iter().enumerate();
    let (_, first) = iter.next().expect("nonempty");
    let mut p0 = path.clone();
    p0.push(0);
    let (mut acc_tree, mut acc_embed) = eval(first, p0, labels)?;
    for (i, child) in iter {
        let mut pi = path.clone();
        pi.push(i);
        let (t, e) = eval(child, pi, labels)?;
        let (composite, left, right) = compose_at(&acc_tree, &t, depth)?;
        for m in acc_embed.values_mut() {
            for v in m.values_mut() {
                *v = left[v].clone();
            }
        }
        for (leaf, m) in e {
            let rewritten: CellMap =
                m.into_iter().map(|(k, v)| (k, right[&v].clone())).collect();
            acc_embed.insert(leaf, rewritten);
        }
        acc_tree = composite;
    }
    Ok((acc_tree, acc_embed))
}

/// Compose two trees along their shared `k`-boundary (`a` on the source side,
/// `b` on the target side), with the embeddings of both factors into the
/// composite.
pub fn compose_at(a: &Tree, b: &Tree, k: usize) -> Result<(Tree, CellMap, CellMap), TreeError> {
    if k == 0 {
        let m_a = a.children.len();
        let mut children = a.children.clone();
        children.extend(b.children.iter().cloned());
        let composite = Tree::node(children);
        let left: CellMap = a.cells().into_iter().map(|c| (c.clone(), c)).collect();
        let right: CellMap = b
            .cells()
            .into_iter()
            .map(|c| {
                let mut image = c.clone();
                if image.path.is_empty() {
                    image.joint += m_a;
                } else {
                    image.path[0] += m_a;
                }
                (c, image)
            })
            .collect();
        return Ok((composite, left, right));
    }
    if a.children.len() != b.children.len() {
        return Err(TreeError::IncompatibleBoundaries(format!(
            "cannot compose along dimension {k}: {} vs {} segments",
            a.children.len(),
            b.children.len()
        )));
    }
    let mut children = Vec::with_capacity(a.children.len());
    let mut left: CellMap = BTreeMap::new();
    let mut right: CellMap = BTreeMap::new();
    for j in 0..=a.children.len() {
        let c = CellId { path: Vec::new(), joint: j };
        left.insert(c.clone(), c.clone());
        right.insert(c.clone(), c);
    }
    for (i, (ca, cb)) in a.children.iter().zip(&b.children).enumerate() {
        let (comp, la, rb) = compose_at(ca, cb, k - 1)?;
        children.push(comp);
        for (cell, image) in la {
            left.insert(prefix_cell(i, &cell), prefix_cell(i, &image));
        }
        for (cell, image) in rb {
            right.insert(prefix_cell(i, &cell), prefix_cell(i, &image));
        }
    }
    Ok((Tree::node(children), left, right))
}

fn prefix_cell(i: usize, c: &CellId) -> CellId {
    let mut path = Vec::with_capacity(c.path.len() + 1);
    path.push(i);
    path.extend_from_slice(&c.path);
    CellId { path, joint: c.joint }
}

/// List-of-naturals model of dimension `<= 2` diagrams and their
/// substitution, used as an oracle against the tree implementation.
pub mod grid {
    use super::TreeError;

    /// A dimension `<= 2` pasting diagram: column heights per segment, plus
    /// the ambient dimension. Dimension 1 diagrams have all-zero columns;
    /// dimension 0 is the empty list.
    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct GridDiagram {
        pub cols: Vec<usize>,
        pub dim: usize,
    }

    impl GridDiagram {
        pub fn boundary1(&self) -> usize {
            self.cols.len()
        }
    }

    /// Grid-side substitution for an outer diagram of dimension exactly 2.
    ///
    /// `seg_labels[i]` holds the labels over segment `i`: the common path
    /// length of its parallel 1-cells and the list of 2-cell labels stacked
    /// over it (source side first).
    pub fn subst2(
        outer: &GridDiagram,
        seg_labels: &[(usize, Vec<GridDiagram>)],
    ) -> Result<GridDiagram, TreeError> {
        if seg_labels.len() != outer.cols.len() {
            return Err(TreeError::IncompatibleBoundaries(format!(
                "expected labels for {} segments, got {}",
                outer.cols.len(),
                seg_labels.len()
            )));
        }
        let mut cols = Vec::new();
        for (i, (path_len, stack)) in seg_labels.iter().enumerate() {
            if stack.len() != outer.cols[i] {
                return Err(TreeError::IncompatibleBoundaries(format!(
                    "segment {i} carries {} two-cells, got {} labels",
                    outer.cols[i],
                    stack.len()
                )));
            }
            if stack.is_empty() {
                // a bare 1-cell labeled by a path contributes that many
                // columns of height zero
                cols.extend(std::iter::repeat(0).take(*path_len));
                continue;
            }
            let mut acc = vec![0usize; *path_len];
            for label in stack {
                if label.boundary1() != *path_len {
                    return Err(TreeError::IncompatibleBoundaries(format!(
                        "segment {i}: label over a path of {} does not match {}",
                        label.boundary1(),
                        path_len
                    )));
                }
                for (a, b) in acc.iter_mut().zip(&label.cols) {
                    *a += b;
                }
            }
            cols.extend(acc);
        }
        Ok(GridDiagram { cols, dim: 2 })
    }

    /// Dimension 1 substitution: path lengths add.
    pub fn subst1(inner_lengths: &[usize]) -> usize {
        inner_lengths.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(s: &str) -> PastingDiagram {
        PastingDiagram::parse(s).unwrap()
    }

    #[test]
    fn parse_and_print_roundtrip() {
        for s in ["[]", "[0]", "[2,3]", "[]@2", "[0,0]", "[1]"] {
            let p = pd(s);
            assert_eq!(p.to_string(), s);
            assert_eq!(PastingDiagram::parse(&p.to_string()).unwrap(), p);
        }
        assert_eq!(pd("t(t(),t(t()))"), pd("[0,1]"));
        assert_eq!(pd("pt"), PastingDiagram::point());
        assert!(PastingDiagram::parse("[2,]").is_err());
        assert!(PastingDiagram::parse("[2").is_err());
    }

    #[test]
    fn enumerate_dim1_matches_path_lengths() {
        let ds = PastingDiagram::enumerate(1, 4);
        assert_eq!(ds.len(), 4);
        let lengths: Vec<usize> = ds.iter().map(|d| d.grid().unwrap().len()).collect();
        assert_eq!(lengths, vec![0, 1, 2, 3]);
    }

    #[test]
    fn enumerate_dim0_is_single_point() {
        let ds = PastingDiagram::enumerate(0, 4);
        assert_eq!(ds, vec![PastingDiagram::point()]);
    }

    #[test]
    fn boundary_of_columns_is_path() {
        let p = pd("[2,3]");
        assert_eq!(p.boundary(1), pd("[0,0]"));
        assert_eq!(p.boundary(0), PastingDiagram::point());
        assert_eq!(p.boundary(5), p);
    }

    #[test]
    fn cells_of_small_shapes() {
        // length-2 path: 3 points, 2 arrows
        let p = pd("[0,0]");
        assert_eq!(p.tree().cells_of_dim(0).len(), 3);
        assert_eq!(p.tree().cells_of_dim(1).len(), 2);
        // [2,3]: 3 points, 3+4 parallel 1-cells, 5 two-cells
        let q = pd("[2,3]");
        assert_eq!(q.tree().cells_of_dim(0).len(), 3);
        assert_eq!(q.tree().cells_of_dim(1).len(), 7);
        assert_eq!(q.tree().cells_of_dim(2).len(), 5);
    }

    #[test]
    fn substitution_concatenates_paths() {
        // outer path of 3, inner paths of lengths 2, 0, 1
        let outer = pd("[0,0,0]");
        let mut leaves = BTreeMap::new();
        for (i, len) in [2usize, 0, 1].iter().enumerate() {
            let cell = CellId { path: vec![i], joint: 0 };
            leaves.insert(cell, PastingDiagram::from_grid(&vec![0; *len], 1).unwrap());
        }
        let dd = DiagramOfDiagrams::from_leaf_labels(outer, &leaves).unwrap();
        assert_eq!(substitute(&dd).unwrap(), pd("[0,0,0]"));
    }

    #[test]
    fn substitution_side_by_side_columns() {
        // outer [1,1], inner columns [2] and [3]
        let outer = pd("[1,1]");
        let mut leaves = BTreeMap::new();
        leaves.insert(CellId { path: vec![0, 0], joint: 0 }, pd("[2]"));
        leaves.insert(CellId { path: vec![1, 0], joint: 0 }, pd("[3]"));
        let dd = DiagramOfDiagrams::from_leaf_labels(outer, &leaves).unwrap();
        assert_eq!(substitute(&dd).unwrap(), pd("[2,3]"));
    }

    #[test]
    fn substitution_units_leave_outer_unchanged() {
        for s in ["[2,3]", "[0,0]", "[]", "[1]", "[]@2"] {
            let outer = pd(s);
            let mut leaves = BTreeMap::new();
            for cell in outer.tree().leaf_cells() {
                leaves.insert(cell.clone(), PastingDiagram::globe(cell.dim()));
            }
            let dd = DiagramOfDiagrams::from_leaf_labels(outer.clone(), &leaves).unwrap();
            assert_eq!(substitute(&dd).unwrap(), outer);
        }
    }

    #[test]
    fn vertical_stacking_adds_columnwise() {
        // outer [2] with stacked labels [2,3] and [1,1] over a path of 2
        let outer = pd("[2]");
        let mut leaves = BTreeMap::new();
        leaves.insert(CellId { path: vec![0, 0], joint: 0 }, pd("[2,3]"));
        leaves.insert(CellId { path: vec![0, 1], joint: 0 }, pd("[1,1]"));
        let dd = DiagramOfDiagrams::from_leaf_labels(outer, &leaves).unwrap();
        assert_eq!(substitute(&dd).unwrap(), pd("[3,4]"));
    }

    #[test]
    fn incompatible_boundaries_rejected() {
        // stacked labels over one segment must share their 1-boundary
        let outer = pd("[2]");
        let mut leaves = BTreeMap::new();
        leaves.insert(CellId { path: vec![0, 0], joint: 0 }, pd("[2,3]"));
        leaves.insert(CellId { path: vec![0, 1], joint: 0 }, pd("[1]"));
        assert!(DiagramOfDiagrams::from_leaf_labels(outer, &leaves).is_err());
    }

    #[test]
    fn degenerate_outer_collapses() {
        let outer = PastingDiagram::id_tower(2);
        let mut leaves = BTreeMap::new();
        leaves.insert(CellId { path: vec![], joint: 0 }, PastingDiagram::point());
        let dd = DiagramOfDiagrams::from_leaf_labels(outer, &leaves).unwrap();
        assert_eq!(substitute(&dd).unwrap(), PastingDiagram::id_tower(2));
    }

    #[test]
    fn embeddings_cover_composite() {
        let outer = pd("[1,1]");
        let mut leaves = BTreeMap::new();
        leaves.insert(CellId { path: vec![0, 0], joint: 0 }, pd("[2]"));
        leaves.insert(CellId { path: vec![1, 0], joint: 0 }, pd("[3]"));
        let dd = DiagramOfDiagrams::from_leaf_labels(outer, &leaves).unwrap();
        let (result, embeddings) = substitute_full(&dd).unwrap();
        let mut covered: std::collections::BTreeSet<CellId> = Default::default();
        for m in embeddings.values() {
            covered.extend(m.values().cloned());
        }
        let all: std::collections::BTreeSet<CellId> =
            result.tree().cells().into_iter().collect();
        assert_eq!(covered, all);
    }
}
