//! The subgroup graph: vertices are subgroups, edges join a subgroup to each
//! subgroup in which it is maximal.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::subgroup::{self, cyclic_subgroups, minimal_subgroups, AlphaTable, MinimalSubgroupTable};
use crate::{ElementSet, Error, Group, Result, Subgroup};

/// Subgroup lattice of a group with its cover edges.
///
/// Edges are stored directed, `(i, j)` meaning vertex `i` is a maximal
/// subgroup of vertex `j`, sorted ascending. Vertex 0 is the trivial
/// subgroup and the last vertex is the whole group.
#[derive(Clone, Debug)]
pub struct Lattice {
    label: String,
    vertices: Vec<Subgroup>,
    covers: Vec<(usize, usize)>,
    deg1: Vec<usize>,
    deg2: Vec<usize>,
    index: HashMap<ElementSet, usize>,
}

/// Degree split of one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degree {
    /// Number of maximal subgroups of the vertex.
    pub deg1: usize,
    /// Number of subgroups in which the vertex is maximal.
    pub deg2: usize,
    pub delta: usize,
}

impl Lattice {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn vertices(&self) -> &[Subgroup] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &Subgroup {
        &self.vertices[v]
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn edge_count(&self) -> usize {
        self.covers.len()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(h.members()).copied()
    }

    pub fn degree(&self, v: usize) -> Result<Degree> {
        if v >= self.vertices.len() {
            return Err(Error::IndexOutOfRange {
                index: v,
                order: self.vertices.len(),
            });
        }
        Ok(Degree {
            deg1: self.deg1[v],
            deg2: self.deg2[v],
            delta: self.deg1[v] + self.deg2[v],
        })
    }

    pub fn degrees(&self) -> Vec<Degree> {
        (0..self.len()).map(|v| self.degree(v).expect("in range")).collect()
    }

    pub fn deltas(&self) -> Vec<usize> {
        (0..self.len()).map(|v| self.deg1[v] + self.deg2[v]).collect()
    }

    /// Indices of the maximal subgroups of vertex `v`.
    pub fn lower_covers(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers.iter().filter(move |e| e.1 == v).map(|e| e.0)
    }

    /// Indices of the vertices in which `v` is maximal.
    pub fn upper_covers(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers.iter().filter(move |e| e.0 == v).map(|e| e.1)
    }

    pub fn minimal_subgroups(&self) -> MinimalSubgroupTable {
        minimal_subgroups(&self.vertices)
    }
}

/// Builds the lattice from a complete, sorted subgroup list.
///
/// The list is checked first: it must be strictly sorted, run from the
/// trivial subgroup to the whole group, and be closed under joining with
/// every cyclic subgroup.
pub fn build_lattice(g: &Group, subs: &[Subgroup]) -> Result<Lattice> {
    check_complete(g, subs)?;
    let index: HashMap<ElementSet, usize> = subs
        .iter()
        .enumerate()
        .map(|(i, h)| (h.members().clone(), i))
        .collect();

    let mut covers = Vec::new();
    for (j, top) in subs.iter().enumerate() {
        // Descending order: a proper subgroup is non-maximal exactly when it
        // sits inside a maximal subgroup found earlier.
        let mut maximal: Vec<usize> = Vec::new();
        for i in (0..j).rev() {
            let h = &subs[i];
            if top.order() % h.order() != 0 || h.order() == top.order() || !h.is_subgroup_of(top) {
                continue;
            }
            let inside = maximal.iter().any(|&m| {
                let k = &subs[m];
                k.order() % h.order() == 0 && h.is_proper_subgroup_of(k)
            });
            if !inside {
                maximal.push(i);
            }
        }
        covers.extend(maximal.into_iter().map(|i| (i, j)));
    }
    covers.sort_unstable();

    let mut deg1 = vec![0; subs.len()];
    let mut deg2 = vec![0; subs.len()];
    for &(i, j) in &covers {
        deg2[i] += 1;
        deg1[j] += 1;
    }
    Ok(Lattice {
        label: g.label().to_string(),
        vertices: subs.to_vec(),
        covers,
        deg1,
        deg2,
        index,
    })
}

fn check_complete(g: &Group, subs: &[Subgroup]) -> Result<()> {
    let (Some(first), Some(last)) = (subs.first(), subs.last()) else {
        return Err(Error::Integrity("empty subgroup list".into()));
    };
    if let Some(h) = subs.iter().find(|h| h.members().capacity() != g.order()) {
        return Err(Error::Integrity(format!(
            "subgroup over {} elements in a group of order {}",
            h.members().capacity(),
            g.order()
        )));
    }
    if let Some(w) = subs.windows(2).position(|w| w[0] >= w[1]) {
        return Err(Error::Integrity(format!(
            "subgroup list not strictly sorted at position {}",
            w + 1
        )));
    }
    if *first != Subgroup::trivial(g) {
        return Err(Error::Integrity("trivial subgroup missing".into()));
    }
    if *last != Subgroup::whole(g) {
        return Err(Error::Integrity("whole group missing".into()));
    }
    let present: std::collections::HashSet<&ElementSet> = subs.iter().map(Subgroup::members).collect();
    let cyclics = cyclic_subgroups(g);
    for h in subs {
        for (_, c) in &cyclics {
            if c.is_subgroup_of(h) {
                continue;
            }
            let joined = subgroup::join(g, h, c);
            if !present.contains(joined.members()) {
                return Err(Error::Integrity(format!(
                    "join of {:?} and {:?} is missing from the list",
                    h.elements(),
                    c.elements()
                )));
            }
        }
    }
    Ok(())
}

/// Regularity verdict for a subgroup graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub label: String,
    pub vertex_count: usize,
    /// δ values sorted ascending.
    pub degree_sequence: Vec<usize>,
    pub alpha: AlphaTable,
    pub is_regular: bool,
    /// Lexicographically first vertex pair with unequal degree.
    pub witness: Option<(usize, usize)>,
}

pub fn regularity(lat: &Lattice) -> RegularityReport {
    let deltas = lat.deltas();
    // The first pair (i, j) with i < j and unequal degree always has i = 0.
    let witness = deltas
        .iter()
        .position(|&d| d != deltas[0])
        .map(|j| (0, j));
    let mut degree_sequence = deltas;
    degree_sequence.sort_unstable();
    RegularityReport {
        label: lat.label.clone(),
        vertex_count: lat.len(),
        degree_sequence,
        alpha: lat.minimal_subgroups().counts(),
        is_regular: witness.is_none(),
        witness,
    }
}

/// Graphviz digraph of the lattice, bottom to top, one rank per subgroup order.
pub fn export_dot(lat: &Lattice) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph subgroup_lattice {{");
    let _ = writeln!(out, "  label=\"{}\";", lat.label.replace('"', "\\\""));
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=box];");
    for (i, h) in lat.vertices.iter().enumerate() {
        let _ = writeln!(out, "  v{i} [label=\"order={} idx={i}\"];", h.order());
    }
    let mut start = 0;
    while start < lat.len() {
        let order = lat.vertices[start].order();
        let end = lat.vertices[start..]
            .iter()
            .position(|h| h.order() != order)
            .map_or(lat.len(), |k| start + k);
        let ids: Vec<String> = (start..end).map(|i| format!("v{i};")).collect();
        let _ = writeln!(out, "  {{ rank=same; {} }}", ids.join(" "));
        start = end;
    }
    for &(i, j) in &lat.covers {
        let _ = writeln!(out, "  v{i} -> v{j};");
    }
    out.push_str("}\n");
    out
}
