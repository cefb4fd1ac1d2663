//! The weighted Bratteli diagram `Lambda(n)` built by alternately restricting
//! to `U_{n-1}` and inducing back to `U_n`, starting from the trivial character.
//!
//! Levels are counted in half steps: level `h` holds partitions of `[n]` when
//! `h` is even and of `[n-1]` when `h` is odd.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::branching::{induction_coefficient, restrict, BranchingCache};
use crate::coeff::{Laurent, QMonomial};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::setpartition::{parse_partition, SetPartition};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub partition: SetPartition,
    pub level: usize,
}

/// Edge between consecutive levels, by index within each level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub level: usize,
    pub from: usize,
    pub to: usize,
    pub label: QMonomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BratteliDiagram {
    n: usize,
    k: usize,
    levels: Vec<Vec<SetPartition>>,
    /// `out[h][v]`: edges leaving vertex `v` of level `h`, sorted by target.
    out: Vec<Vec<Vec<(usize, QMonomial)>>>,
}

pub fn build(n: usize, k: usize) -> Result<BratteliDiagram> {
    BratteliDiagram::build(n, k, Exec::default())
}

impl BratteliDiagram {
    pub fn build(n: usize, k: usize, exec: Exec) -> Result<Self> {
        if n < 2 {
            return Err(Error::GroundTooSmall(n));
        }
        let cache = BranchingCache::new();
        let mut levels = vec![vec![SetPartition::empty(n)]];
        let mut out = Vec::new();
        for h in 0..2 * k {
            let current = &levels[h];
            let expansions = exec.map(current, |v| {
                if h % 2 == 0 {
                    cache.restrict(v)
                } else {
                    cache.induce(v)
                }
            });
            let expansions = expansions.into_iter().collect::<Result<Vec<_>>>()?;
            let mut next: Vec<SetPartition> = expansions.iter().flat_map(|c| c.keys().cloned()).collect();
            next.sort();
            next.dedup();
            let edges = expansions
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|(sp, m)| (next.binary_search(sp).expect("target listed"), *m))
                        .collect()
                })
                .collect();
            out.push(edges);
            levels.push(next);
        }
        Ok(BratteliDiagram { n, k, levels, out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of half-step levels, `2k + 1`.
    pub fn level_count(&self) -> usize {
        self.levels.len()
    }

    pub fn level(&self, h: usize) -> &[SetPartition] {
        &self.levels[h]
    }

    pub fn index_of(&self, sp: &SetPartition, h: usize) -> Option<usize> {
        self.levels.get(h)?.binary_search(sp).ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.levels.iter().enumerate().flat_map(|(h, level)| {
            level.iter().map(move |sp| Vertex { partition: sp.clone(), level: h })
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.out.iter().enumerate().flat_map(|(h, per)| {
            per.iter().enumerate().flat_map(move |(from, list)| {
                list.iter().map(move |&(to, label)| Edge { level: h, from, to, label })
            })
        })
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().flatten().map(Vec::len).sum()
    }

    pub fn children(&self, h: usize, v: usize) -> &[(usize, QMonomial)] {
        &self.out[h][v]
    }

    pub fn edge_label(&self, h: usize, from: &SetPartition, to: &SetPartition) -> Option<QMonomial> {
        let a = self.index_of(from, h)?;
        let b = self.index_of(to, h + 1)?;
        let list = self.out.get(h)?.get(a)?;
        list.binary_search_by_key(&b, |e| e.0).ok().map(|p| list[p].1)
    }

    fn vertex_level(&self, k: usize) -> Result<usize> {
        if k > self.k {
            return Err(Error::VertexAbsent { partition: String::new(), level: 2 * k });
        }
        Ok(2 * k)
    }

    /// Every path from the root to `(lambda, k)`, depth first with children in
    /// partition order.
    pub fn paths_to(&self, lambda: &SetPartition, k: usize) -> Result<PathIter<'_>> {
        let h = self.vertex_level(k)?;
        let target = self.index_of(lambda, h).ok_or_else(|| Error::VertexAbsent {
            partition: lambda.to_string(),
            level: h,
        })?;
        let mut reach: Vec<Vec<bool>> = (0..=h).map(|l| vec![false; self.levels[l].len()]).collect();
        reach[h][target] = true;
        for l in (0..h).rev() {
            for v in 0..self.levels[l].len() {
                reach[l][v] = self.out[l][v].iter().any(|&(c, _)| reach[l + 1][c]);
            }
        }
        let stack = if reach[0][0] { vec![(0, 0)] } else { Vec::new() };
        Ok(PathIter { d: self, reach, stack })
    }

    /// Product of all edge labels along the path.
    pub fn path_weight(&self, p: &Path) -> Result<QMonomial> {
        let mut w = QMonomial::ONE;
        for (h, pair) in p.steps.windows(2).enumerate() {
            let label = self
                .edge_label(h, &pair[0], &pair[1])
                .ok_or_else(|| Error::InvalidPath(format!("no edge {{{}}} -> {{{}}} at level {h}", pair[0], pair[1])))?;
            w = w * label;
        }
        Ok(w)
    }

    /// Sum of path weights into every vertex at level `h`, by dynamic programming.
    pub fn level_multiplicities(&self, h: usize) -> Vec<Laurent> {
        let mut m = vec![Laurent::one()];
        for l in 0..h.min(self.levels.len() - 1) {
            let mut next = vec![Laurent::zero(); self.levels[l + 1].len()];
            for (v, weight) in m.iter().enumerate() {
                for &(c, label) in &self.out[l][v] {
                    next[c] += &(weight * &label.canonical());
                }
            }
            m = next;
        }
        m
    }

    pub fn multiplicity(&self, lambda: &SetPartition, k: usize) -> Laurent {
        if k > self.k {
            return Laurent::zero();
        }
        match self.index_of(lambda, 2 * k) {
            Some(v) => self.level_multiplicities(2 * k).swap_remove(v),
            None => Laurent::zero(),
        }
    }

    pub fn export_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph bratteli {{");
        let _ = writeln!(s, "  rankdir=TB;");
        let _ = writeln!(s, "  node [shape=box, fontname=\"monospace\"];");
        for (h, level) in self.levels.iter().enumerate() {
            let ids: Vec<String> = (0..level.len()).map(|v| format!("v{h}_{v}")).collect();
            let _ = writeln!(s, "  {{ rank=same; {}; }}", ids.join("; "));
            for (v, sp) in level.iter().enumerate() {
                let text = if sp.is_empty() { "{}".to_string() } else { format!("{{{sp}}}") };
                let _ = writeln!(s, "  v{h}_{v} [label=\"{text}\\nlevel {}\"];", level_name(h));
            }
        }
        for e in self.edges() {
            let _ = writeln!(
                s,
                "  v{}_{} -> v{}_{} [label=\"{}\"];",
                e.level,
                e.from,
                e.level + 1,
                e.to,
                e.label
            );
        }
        s.push_str("}\n");
        s
    }

    pub fn to_file(&self) -> DiagramFile {
        let mut offsets = Vec::new();
        let mut vertices = Vec::new();
        for (h, level) in self.levels.iter().enumerate() {
            offsets.push(vertices.len());
            for sp in level {
                vertices.push(VertexRecord { level: h, partition: sp.to_string() });
            }
        }
        let edges = self
            .edges()
            .map(|e| EdgeRecord {
                from: offsets[e.level] + e.from,
                to: offsets[e.level + 1] + e.to,
                label: e.label,
            })
            .collect();
        DiagramFile { version: 1, n: self.n, k: self.k, vertices, edges }
    }

    pub fn from_file(file: &DiagramFile) -> Result<Self> {
        if file.version != 1 {
            return Err(Error::DiagramFile(format!("unsupported version {}", file.version)));
        }
        let (n, k) = (file.n, file.k);
        if n < 2 {
            return Err(Error::GroundTooSmall(n));
        }
        let mut levels: Vec<Vec<SetPartition>> = vec![Vec::new(); 2 * k + 1];
        let mut position = Vec::with_capacity(file.vertices.len());
        for v in &file.vertices {
            let ground = if v.level % 2 == 0 { n } else { n - 1 };
            let level = levels
                .get_mut(v.level)
                .ok_or_else(|| Error::DiagramFile(format!("vertex level {} beyond 2k", v.level)))?;
            position.push((v.level, level.len()));
            level.push(parse_partition(&v.partition, ground)?);
        }
        for level in &levels {
            if level.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::DiagramFile("vertices out of canonical order".into()));
            }
        }
        let mut out: Vec<Vec<Vec<(usize, QMonomial)>>> =
            (0..2 * k).map(|h| vec![Vec::new(); levels[h].len()]).collect();
        for e in &file.edges {
            let (&(hf, a), &(ht, b)) = position
                .get(e.from)
                .zip(position.get(e.to))
                .ok_or_else(|| Error::DiagramFile("edge endpoint out of range".into()))?;
            if ht != hf + 1 {
                return Err(Error::DiagramFile("edge skips a level".into()));
            }
            out[hf][a].push((b, e.label));
        }
        for list in out.iter_mut().flatten() {
            list.sort_by_key(|e| e.0);
        }
        Ok(BratteliDiagram { n, k, levels, out })
    }
}

/// `"0"`, `"1/2"`, `"1"`, `"3/2"`, ... for a half-step index.
pub fn level_name(h: usize) -> String {
    if h % 2 == 0 {
        (h / 2).to_string()
    } else {
        format!("{}/2", h)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub level: usize,
    pub partition: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub from: usize,
    pub to: usize,
    pub label: QMonomial,
}

/// On-disk form of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramFile {
    pub version: u32,
    pub n: usize,
    pub k: usize,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
}

/// `(lambda^0, lambda^{1/2}, ..., lambda^k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    n: usize,
    steps: Vec<SetPartition>,
}

impl Path {
    /// Checks alternation of ground sets and an odd number of entries.
    pub fn new(n: usize, steps: Vec<SetPartition>) -> Result<Self> {
        if steps.is_empty() || steps.len() % 2 == 0 {
            return Err(Error::InvalidPath(format!("{} entries; expected 2k+1", steps.len())));
        }
        for (h, sp) in steps.iter().enumerate() {
            let ground = if h % 2 == 0 { n } else { n - 1 };
            if sp.n() != ground {
                return Err(Error::InvalidPath(format!("entry {h} lives on {} nodes, expected {ground}", sp.n())));
            }
        }
        if !steps[0].is_empty() {
            return Err(Error::InvalidPath("paths start at the empty partition".into()));
        }
        Ok(Path { n, steps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        (self.steps.len() - 1) / 2
    }

    pub fn steps(&self) -> &[SetPartition] {
        &self.steps
    }

    pub fn endpoint(&self) -> &SetPartition {
        self.steps.last().expect("nonempty")
    }

    /// Edge labels recomputed from the branching rules; fails on a missing edge.
    pub fn edge_labels(&self) -> Result<Vec<QMonomial>> {
        let mut labels = Vec::with_capacity(self.steps.len() - 1);
        for (h, pair) in self.steps.windows(2).enumerate() {
            let label = if h % 2 == 0 {
                restrict(&pair[0])?.get(&pair[1])
            } else {
                induction_coefficient(&pair[1], &pair[0])?
            };
            if label.is_zero() {
                return Err(Error::InvalidPath(format!(
                    "no edge {{{}}} -> {{{}}} at level {}",
                    pair[0],
                    pair[1],
                    level_name(h)
                )));
            }
            labels.push(label);
        }
        Ok(labels)
    }

    pub fn validate(&self) -> Result<()> {
        self.edge_labels().map(|_| ())
    }

    /// Weight from the branching rules, without a diagram.
    pub fn weight(&self) -> Result<QMonomial> {
        Ok(self.edge_labels()?.into_iter().fold(QMonomial::ONE, |a, b| a * b))
    }
}

pub fn path_weight(d: &BratteliDiagram, p: &Path) -> Result<QMonomial> {
    d.path_weight(p)
}

pub fn multiplicity(d: &BratteliDiagram, lambda: &SetPartition, k: usize) -> Laurent {
    d.multiplicity(lambda, k)
}

pub fn paths_to<'a>(d: &'a BratteliDiagram, lambda: &SetPartition, k: usize) -> Result<PathIter<'a>> {
    d.paths_to(lambda, k)
}

pub fn export_dot(d: &BratteliDiagram) -> String {
    d.export_dot()
}

/// Depth-first path stream; each iterator owns its traversal state.
#[derive(Clone, Debug)]
pub struct PathIter<'a> {
    d: &'a BratteliDiagram,
    reach: Vec<Vec<bool>>,
    stack: Vec<(usize, usize)>,
}

impl Iterator for PathIter<'_> {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        let target_level = self.reach.len() - 1;
        loop {
            let depth = self.stack.len().checked_sub(1)?;
            if depth == target_level {
                let steps = self
                    .stack
                    .iter()
                    .enumerate()
                    .map(|(h, &(v, _))| self.d.levels[h][v].clone())
                    .collect();
                self.stack.pop();
                return Some(Path { n: self.d.n, steps });
            }
            let (v, pos) = self.stack[depth];
            let children = &self.d.out[depth][v];
            match (pos..children.len()).find(|&c| self.reach[depth + 1][children[c].0]) {
                Some(c) => {
                    self.stack[depth].1 = c + 1;
                    self.stack.push((children[c].0, 0));
                }
                None => {
                    self.stack.pop();
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(text: &str, n: usize) -> SetPartition {
        parse_partition(text, n).unwrap()
    }

    #[test]
    fn first_levels_of_lambda3() {
        let d = build(3, 1).unwrap();
        assert_eq!(d.level(0), &[SetPartition::empty(3)]);
        assert_eq!(d.level(1), &[SetPartition::empty(2)]);
        let want = vec![sp("1-3", 3), sp("2-3", 3), SetPartition::empty(3)];
        let mut got = d.level(2).to_vec();
        got.sort_by_key(|p| p.to_string());
        let mut want_sorted = want.clone();
        want_sorted.sort_by_key(|p| p.to_string());
        assert_eq!(got, want_sorted);
        assert_eq!((d.vertex_count(), d.edge_count()), (5, 4));
    }

    #[test]
    fn lambda3_matches_figure_rows() {
        let d = build(3, 3).unwrap();
        let sizes: Vec<usize> = (0..d.level_count()).map(|h| d.level(h).len()).collect();
        assert_eq!(sizes, vec![1, 1, 3, 2, 5, 2, 5]);
        assert_eq!(d.edge_count(), 26);
        let t_edges = d.edges().filter(|e| e.label == QMonomial::t_pow(1)).count();
        let other: Vec<String> =
            d.edges().filter(|e| e.label != QMonomial::ONE && e.label != QMonomial::t_pow(1)).map(|e| e.label.to_string()).collect();
        assert_eq!((t_edges, other), (9, Vec::<String>::new()));
    }

    #[test]
    fn k0_has_one_path() {
        let d = build(4, 0).unwrap();
        let paths: Vec<Path> = d.paths_to(&SetPartition::empty(4), 0).unwrap().collect();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].steps(), &[SetPartition::empty(4)]);
        assert_eq!(d.multiplicity(&SetPartition::empty(4), 0), Laurent::one());
    }

    #[test]
    fn displayed_path_weight() {
        let d = build(3, 3).unwrap();
        let p = Path::new(
            3,
            vec![
                SetPartition::empty(3),
                SetPartition::empty(2),
                sp("1-3", 3),
                sp("1-2", 2),
                sp("1-2,2-3", 3),
                sp("1-2", 2),
                sp("1-2", 3),
            ],
        )
        .unwrap();
        assert_eq!(d.path_weight(&p).unwrap(), QMonomial::t_pow(2));
        assert_eq!(p.weight().unwrap(), QMonomial::t_pow(2));
        assert!(d.paths_to(&sp("1-2", 3), 3).unwrap().any(|x| x == p));
    }

    #[test]
    fn missing_vertex_is_an_error() {
        let d = build(3, 1).unwrap();
        assert!(matches!(d.paths_to(&sp("1-2,2-3", 3), 1), Err(Error::VertexAbsent { .. })));
        assert!(d.paths_to(&SetPartition::empty(3), 2).is_err());
    }

    #[test]
    fn file_round_trip() {
        let d = build(3, 2).unwrap();
        let back = BratteliDiagram::from_file(&d.to_file()).unwrap();
        assert_eq!(back, d);
        let json = serde_json::to_string(&d.to_file()).unwrap();
        let parsed: DiagramFile = serde_json::from_str(&json).unwrap();
        assert_eq!(BratteliDiagram::from_file(&parsed).unwrap(), d);
    }

    #[test]
    fn dot_is_deterministic() {
        let a = build(3, 1).unwrap().export_dot();
        let b = BratteliDiagram::build(3, 1, Exec::Sequential).unwrap().export_dot();
        assert_eq!(a, b);
        assert_eq!(a.matches("->").count(), 4);
        let one = build(3, 0).unwrap().export_dot();
        assert_eq!(one.matches("[label=").count(), 1);
    }
}
