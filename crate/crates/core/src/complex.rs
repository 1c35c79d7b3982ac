//! Simplicial complexes represented by their facets.
//!
//! A complex is stored as an interned vertex table plus a sequence of
//! inclusion-maximal facets. All operations are pure: they return new
//! complexes and never mutate their input. The vertex table always
//! contains exactly the vertices that appear in at least one facet, so
//! `vertex_count` is the number of vertices of the complex.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// Vertex ids index into the owning complex's vertex table.
pub type VertexId = usize;

/// A facet as a set of vertex ids.
pub type VertexSet = BTreeSet<VertexId>;

/// A simplicial complex given by its inclusion-maximal faces.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<VertexSet>,
}

/// A permutation of facet indices in which each facet is a leaf of the
/// subcollection generated by it and its predecessors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetOrder {
    order: Vec<usize>,
}

impl FacetOrder {
    pub fn indices(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Partition of facet indices into connected components.
///
/// Blocks are ordered by their smallest facet index; indices within a
/// block are ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    blocks: Vec<Vec<usize>>,
}

impl ComponentPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The block containing facet `i`, if any.
    pub fn block_of(&self, i: usize) -> Option<&[usize]> {
        self.blocks
            .iter()
            .find(|b| b.contains(&i))
            .map(|b| b.as_slice())
    }
}

/// Two complexes are equal when they list the same facets (as sets of
/// vertex names) in the same order; vertex id assignment is ignored.
impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facet_count() == other.facet_count()
            && (0..self.facet_count()).all(|i| self.facet_name_set(i) == other.facet_name_set(i))
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// The complex with no facets (and hence no vertices).
    pub fn empty() -> Self {
        SimplicialComplex {
            vertices: Vec::new(),
            facets: Vec::new(),
        }
    }

    /// Builds a complex from raw vertex-name sets, keeping exactly the
    /// inclusion-maximal inputs with duplicates removed. Vertex names are
    /// interned in first-appearance order.
    pub fn from_named_facets<I, F, S>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut vertices: Vec<String> = Vec::new();
        let mut index: BTreeMap<String, VertexId> = BTreeMap::new();
        let mut all: Vec<VertexSet> = Vec::new();
        for facet in raw {
            let mut set = VertexSet::new();
            for name in facet {
                let name = name.as_ref();
                let id = *index.entry(name.to_string()).or_insert_with(|| {
                    vertices.push(name.to_string());
                    vertices.len() - 1
                });
                set.insert(id);
            }
            if set.is_empty() {
                return Err(Error::InvalidFacet);
            }
            all.push(set);
        }

        // Keep a facet iff it is not contained in a distinct facet and is
        // not a repeat of an earlier one.
        let mut facets: Vec<VertexSet> = Vec::new();
        for (i, f) in all.iter().enumerate() {
            let dominated = all.iter().enumerate().any(|(j, g)| {
                j != i && ((f.is_subset(g) && f != g) || (f == g && j < i))
            });
            if !dominated {
                facets.push(f.clone());
            }
        }
        // Every interned name survives: a dropped facet is contained in a
        // kept one, so no vertex table compaction is needed here.
        Ok(SimplicialComplex { vertices, facets })
    }

    /// Parses the complex text format: one facet per line, vertex names
    /// separated by whitespace; `#` starts a comment; blank lines ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut raw: Vec<Vec<String>> = Vec::new();
        for line in text.lines() {
            let line = match line.find('#') {
                Some(pos) => &line[..pos],
                None => line,
            };
            let names: Vec<String> = line.split_whitespace().map(str::to_string).collect();
            if !names.is_empty() {
                raw.push(names);
            }
        }
        Self::from_named_facets(raw)
    }

    /// Renders the complex text format; `parse_text` round-trips it.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in &self.facets {
            let names: Vec<&str> = f.iter().map(|&v| self.vertices[v].as_str()).collect();
            out.push_str(&names.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet(&self, i: usize) -> Result<&VertexSet> {
        self.facets.get(i).ok_or(Error::InvalidIndex(i))
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|n| n == name)
    }

    /// The facet as a set of vertex names.
    pub fn facet_name_set(&self, i: usize) -> BTreeSet<&str> {
        self.facets[i]
            .iter()
            .map(|&v| self.vertices[v].as_str())
            .collect()
    }

    /// All vertex ids of the complex, i.e. the union of its facets.
    pub fn vertex_set(&self) -> VertexSet {
        (0..self.vertices.len()).collect()
    }

    /// Rebuilds a complex from the given facets of `self`, restricting the
    /// vertex table to the vertices that still appear. Facet order follows
    /// the order of `indices`.
    fn restricted_to(&self, indices: &[usize]) -> Self {
        let mut used: BTreeSet<VertexId> = BTreeSet::new();
        for &i in indices {
            used.extend(self.facets[i].iter().copied());
        }
        let mut remap: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut vertices = Vec::with_capacity(used.len());
        for (new_id, &old_id) in used.iter().enumerate() {
            remap.insert(old_id, new_id);
            vertices.push(self.vertices[old_id].clone());
        }
        let facets = indices
            .iter()
            .map(|&i| self.facets[i].iter().map(|v| remap[v]).collect())
            .collect();
        SimplicialComplex { vertices, facets }
    }

    /// The induced subcollection on a vertex set: all facets entirely
    /// contained in `a`. May have zero facets.
    pub fn induced_subcollection(&self, a: &VertexSet) -> Self {
        let keep: Vec<usize> = (0..self.facets.len())
            .filter(|&i| self.facets[i].is_subset(a))
            .collect();
        self.restricted_to(&keep)
    }

    /// The complex with facet `i` removed.
    pub fn remove_facet(&self, i: usize) -> Result<Self> {
        if i >= self.facets.len() {
            return Err(Error::InvalidIndex(i));
        }
        let keep: Vec<usize> = (0..self.facets.len()).filter(|&j| j != i).collect();
        Ok(self.restricted_to(&keep))
    }

    /// The subcollection generated by the given facets, in the given order.
    pub fn subcollection(&self, indices: &[usize]) -> Result<Self> {
        for &i in indices {
            if i >= self.facets.len() {
                return Err(Error::InvalidIndex(i));
            }
        }
        Ok(self.restricted_to(indices))
    }

    /// Partitions the facets into connected components: two facets share a
    /// block iff they are joined by a chain of pairwise-intersecting facets.
    pub fn connected_components(&self) -> ComponentPartition {
        let q = self.facets.len();
        let mut parent: Vec<usize> = (0..q).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for i in 0..q {
            for j in i + 1..q {
                if !self.facets[i].is_disjoint(&self.facets[j]) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri] = rj;
                    }
                }
            }
        }
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..q {
            let r = find(&mut parent, i);
            by_root.entry(r).or_default().push(i);
        }
        let mut blocks: Vec<Vec<usize>> = by_root.into_values().collect();
        blocks.sort_by_key(|b| b[0]);
        ComponentPartition { blocks }
    }

    /// The reduced connected component of facet `i`: the complex generated
    /// by the inclusion-minimal nonempty sets among `G \ F_i`, where `G`
    /// runs over the other facets of `F_i`'s connected component. Empty when
    /// `F_i` is isolated in its component.
    pub fn reduced_connected_component(&self, i: usize) -> Result<Self> {
        if i >= self.facets.len() {
            return Err(Error::InvalidIndex(i));
        }
        let components = self.connected_components();
        let block = components.block_of(i).expect("facet must lie in a block");
        let fi = &self.facets[i];

        let mut diffs: Vec<VertexSet> = Vec::new();
        for &j in block {
            if j == i {
                continue;
            }
            let d: VertexSet = self.facets[j].difference(fi).copied().collect();
            if !d.is_empty() && !diffs.contains(&d) {
                diffs.push(d);
            }
        }
        let minimal: Vec<VertexSet> = diffs
            .iter()
            .filter(|d| !diffs.iter().any(|e| e.is_subset(d) && *e != **d))
            .cloned()
            .collect();

        // Rebuild over names so the result owns a compact vertex table.
        let raw: Vec<Vec<&str>> = minimal
            .iter()
            .map(|d| d.iter().map(|&v| self.vertices[v].as_str()).collect())
            .collect();
        SimplicialComplex::from_named_facets(raw)
    }

    /// Whether facet `i` is a leaf: it is the only facet, or some other
    /// facet contains its intersection with every other facet.
    pub fn is_leaf(&self, i: usize) -> Result<bool> {
        if i >= self.facets.len() {
            return Err(Error::InvalidIndex(i));
        }
        if self.facets.len() == 1 {
            return Ok(true);
        }
        let fi = &self.facets[i];
        let mut joint_needed: VertexSet = VertexSet::new();
        for (j, fj) in self.facets.iter().enumerate() {
            if j != i {
                joint_needed.extend(fi.intersection(fj).copied());
            }
        }
        Ok(self
            .facets
            .iter()
            .enumerate()
            .any(|(j, fj)| j != i && joint_needed.is_subset(fj)))
    }

    /// Vertices of facet `i` that belong to no other facet. Nonempty
    /// whenever the facet is a leaf.
    pub fn free_vertices(&self, i: usize) -> Result<VertexSet> {
        if i >= self.facets.len() {
            return Err(Error::InvalidIndex(i));
        }
        let mut free = self.facets[i].clone();
        for (j, fj) in self.facets.iter().enumerate() {
            if j != i {
                free = free.difference(fj).copied().collect();
            }
        }
        Ok(free)
    }

    /// Whether, among the facets listed in `active`, the intersections of
    /// facet `active[k]` with the others form a chain under inclusion. Such
    /// a facet is a leaf of every subcollection containing it.
    fn is_good_leaf_among(&self, active: &[usize], k: usize) -> bool {
        let fi = &self.facets[active[k]];
        let mut inters: Vec<VertexSet> = active
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, &j)| fi.intersection(&self.facets[j]).copied().collect())
            .collect();
        inters.sort_by_key(|s| s.len());
        inters.windows(2).all(|w| w[0].is_subset(&w[1]))
    }

    /// Greedy good-leaf removal; returns the removal order if every facet
    /// can be removed, which happens exactly when the complex is a forest.
    fn good_leaf_removal(&self) -> Option<Vec<usize>> {
        let mut active: Vec<usize> = (0..self.facets.len()).collect();
        let mut removed = Vec::with_capacity(active.len());
        while !active.is_empty() {
            // Lowest facet index wins ties.
            let pick = (0..active.len()).find(|&k| self.is_good_leaf_among(&active, k))?;
            removed.push(active.remove(pick));
        }
        Some(removed)
    }

    /// A leaf order of the complex, or `None` when it is not a forest. Every
    /// prefix of the order generates a subcollection in which the last facet
    /// is a leaf; the order is the reverse of the greedy good-leaf removal.
    pub fn leaf_order(&self) -> Option<FacetOrder> {
        let mut order = self.good_leaf_removal()?;
        order.reverse();
        Some(FacetOrder { order })
    }

    /// Whether every nonempty subcollection has a leaf, decided by greedy
    /// good-leaf removal. Agrees with [`brute_force_is_forest`].
    ///
    /// [`brute_force_is_forest`]: SimplicialComplex::brute_force_is_forest
    pub fn is_forest(&self) -> bool {
        self.good_leaf_removal().is_some()
    }

    /// Bitmask images of the facets, available when the vertex table is
    /// small enough for single-word sets.
    fn facet_masks(&self) -> Option<Vec<u128>> {
        if self.vertices.len() > 128 {
            return None;
        }
        Some(
            self.facets
                .iter()
                .map(|f| f.iter().fold(0u128, |m, &v| m | (1 << v)))
                .collect(),
        )
    }

    fn subset_has_leaf_masks(masks: &[u128], members: u32) -> bool {
        let idx: Vec<usize> = (0..masks.len()).filter(|&i| members >> i & 1 == 1).collect();
        if idx.len() == 1 {
            return true;
        }
        idx.iter().any(|&i| {
            let mut x = 0u128;
            for &k in &idx {
                if k != i {
                    x |= masks[i] & masks[k];
                }
            }
            idx.iter().any(|&j| j != i && x & !masks[j] == 0)
        })
    }

    fn subset_has_leaf_sets(&self, idx: &[usize]) -> bool {
        if idx.len() == 1 {
            return true;
        }
        idx.iter().any(|&i| {
            let fi = &self.facets[i];
            let mut x = VertexSet::new();
            for &k in idx {
                if k != i {
                    x.extend(fi.intersection(&self.facets[k]).copied());
                }
            }
            idx.iter().any(|&j| j != i && x.is_subset(&self.facets[j]))
        })
    }

    /// Default facet cap for the exponential forest check.
    pub const BRUTE_FORCE_FACET_CAP: usize = 16;

    /// Decides forestness straight from the definition, checking that every
    /// nonempty subcollection has a leaf. Exponential in the facet count.
    pub fn brute_force_is_forest(&self) -> Result<bool> {
        self.brute_force_is_forest_with_cap(Self::BRUTE_FORCE_FACET_CAP)
    }

    pub fn brute_force_is_forest_with_cap(&self, cap: usize) -> Result<bool> {
        Ok(self.leafless_subcollection_with_cap(cap)?.is_none())
    }

    /// A subcollection without a leaf (smallest cardinality first), or
    /// `None` when the complex is a forest. Witness for non-forests.
    pub fn leafless_subcollection(&self) -> Result<Option<Vec<usize>>> {
        self.leafless_subcollection_with_cap(Self::BRUTE_FORCE_FACET_CAP)
    }

    pub fn leafless_subcollection_with_cap(&self, cap: usize) -> Result<Option<Vec<usize>>> {
        let q = self.facets.len();
        if q > cap {
            return Err(Error::TooLarge(format!(
                "{q} facets exceeds the brute-force cap of {cap}"
            )));
        }
        if q == 0 {
            return Ok(None);
        }
        let masks = self.facet_masks();
        let mut subsets: Vec<u32> = (1..(1u32 << q)).collect();
        subsets.sort_by_key(|s| (s.count_ones(), *s));
        for s in subsets {
            let has_leaf = match &masks {
                Some(masks) => Self::subset_has_leaf_masks(masks, s),
                None => {
                    let idx: Vec<usize> = (0..q).filter(|&i| s >> i & 1 == 1).collect();
                    self.subset_has_leaf_sets(&idx)
                }
            };
            if !has_leaf {
                let idx: Vec<usize> = (0..q).filter(|&i| s >> i & 1 == 1).collect();
                return Ok(Some(idx));
            }
        }
        Ok(None)
    }

    /// A relabeling-normalized copy of the facet list, usable as a cache
    /// key: complexes with equal keys are isomorphic and so have equal
    /// Betti tables.
    pub fn canonical_key(&self) -> Vec<Vec<u32>> {
        let mut named: Vec<Vec<&str>> = (0..self.facets.len())
            .map(|i| self.facet_name_set(i).into_iter().collect())
            .collect();
        named.sort();
        let mut relabel: BTreeMap<&str, u32> = BTreeMap::new();
        let mut next = 0u32;
        let mut key: Vec<Vec<u32>> = named
            .iter()
            .map(|facet| {
                let mut ids: Vec<u32> = facet
                    .iter()
                    .map(|name| {
                        *relabel.entry(name).or_insert_with(|| {
                            next += 1;
                            next - 1
                        })
                    })
                    .collect();
                ids.sort_unstable();
                ids
            })
            .collect();
        key.sort();
        key
    }
}
