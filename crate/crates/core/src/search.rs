//! Exhaustive, isomorphism-reduced enumeration of small drawings.
//!
//! Drawings are generated level by level on the edge count: level e + 1
//! is produced from level e by re-adding one edge in every possible way
//! (cleanly inside a face, crossing a clean edge, or attached to a fresh
//! leaf vertex, with or without a crossing). A child is kept only when
//! its new edge is a canonical reduction of the child — the deletable
//! edge minimizing an invariant key and then the marked canonical form —
//! so each isomorphism class extends exactly one canonical parent.
//! Within a level, members are deduplicated and ordered by canonical
//! form, which makes runs byte-deterministic regardless of worker count.
//!
//! The canonical form itself is the ICPD serialization of a canonical
//! relabeling, minimized over all start darts, both orientations, and
//! (optionally) the global color swap. Equal byte strings therefore mean
//! isomorphic drawings under the sphere symmetries, and every canonical
//! form parses back into a drawing — which is what makes checkpoint
//! files self-contained.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::vertex_connectivity;
use crate::embedding::{
    Color, CrossingId, DartId, Drawing, DrawingSpec, EdgeId, Node, RotEntry, VertexId,
};
use crate::maximality::{addable_edges, apply_addition, is_maximal, EdgeAddition};

/// Canonical serialization of a drawing up to map isomorphism,
/// color-preserving relabeling, optional color swap and orientation
/// reversal. Two drawings are isomorphic under that group iff their
/// canonical forms are equal byte strings.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("canonical forms are ICPD text")
    }
    pub fn to_drawing(&self) -> Drawing {
        Drawing::parse(self.as_str()).expect("canonical forms parse back")
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SymmetryOpts {
    /// include the global black/white swap in the symmetry group
    pub color_swap: bool,
}

impl Default for SymmetryOpts {
    fn default() -> Self {
        SymmetryOpts { color_swap: true }
    }
}

pub fn canonical_form(d: &Drawing, sym: SymmetryOpts) -> CanonicalForm {
    if d.dart_count() == 0 {
        // isolated vertex; under the color swap the color normalizes away
        let color = if sym.color_swap { Color::Black } else { d.colors()[0] };
        let ch = if color == Color::Black { 'B' } else { 'W' };
        return CanonicalForm(format!("icpd 1\nvertex 0 {ch}\nrot v 0\n").into_bytes());
    }
    let (_, best) = best_candidate(d, None, sym);
    let spec = relabel(d, best);
    CanonicalForm(Drawing::build(&spec).expect("relabel").to_icpd().into_bytes())
}

#[derive(Clone, Copy, Debug)]
struct Candidate {
    start: DartId,
    reflect: bool,
    swap: bool,
}

/// Minimal traversal code over all candidates; also returns the winner.
fn best_candidate(d: &Drawing, mark: Option<EdgeId>, sym: SymmetryOpts) -> (Vec<u32>, Candidate) {
    let swaps: &[bool] = if sym.color_swap { &[false, true] } else { &[false] };
    let mut best: Option<(Vec<u32>, Candidate)> = None;
    for &swap in swaps {
        // the first two code words are the root's kind and degree, so only
        // roots minimizing that pair can win
        let mut min_root: Option<(u32, u32)> = None;
        for dd in 0..d.dart_count() as u32 {
            let node = d.origin(DartId(dd));
            let key = (node_kind(d, node, swap), d.rotation(node).len() as u32);
            if min_root.map_or(true, |m| key < m) {
                min_root = Some(key);
            }
        }
        let min_root = min_root.unwrap();
        for dd in 0..d.dart_count() as u32 {
            let start = DartId(dd);
            let node = d.origin(start);
            if (node_kind(d, node, swap), d.rotation(node).len() as u32) != min_root {
                continue;
            }
            for reflect in [false, true] {
                let cand = Candidate { start, reflect, swap };
                let code = encode(d, cand, mark);
                if best.as_ref().map_or(true, |(b, _)| code < *b) {
                    best = Some((code, cand));
                }
            }
        }
    }
    best.expect("non-empty drawing has candidates")
}

fn node_kind(d: &Drawing, node: Node, swap: bool) -> u32 {
    match node {
        Node::Crossing(_) => 0,
        Node::Vertex(v) => match (d.color(v), swap) {
            (Color::Black, false) | (Color::White, true) => 1,
            _ => 2,
        },
    }
}

struct Traversal {
    /// nodes in discovery order
    order: Vec<Node>,
    /// entry dart per discovered node (same indexing as `order`)
    entry: Vec<DartId>,
}

fn traverse(d: &Drawing, cand: Candidate, mut on_dart: impl FnMut(&Traversal, DartId)) -> Traversal {
    let idx = |n: Node| -> usize {
        match n {
            Node::Vertex(v) => v.0 as usize,
            Node::Crossing(x) => d.n() + x.0 as usize,
        }
    };
    let mut seen = vec![false; d.planar_nodes()];
    let mut tr = Traversal { order: Vec::new(), entry: Vec::new() };
    let root = d.origin(cand.start);
    seen[idx(root)] = true;
    tr.order.push(root);
    tr.entry.push(cand.start);
    let mut qi = 0;
    while qi < tr.order.len() {
        let node = tr.order[qi];
        let e0 = tr.entry[qi];
        qi += 1;
        let rot = d.rotation(node);
        let deg = rot.len();
        let p0 = rot.iter().position(|&x| x == e0).expect("entry dart in rotation");
        for step in 0..deg {
            let pos = if cand.reflect {
                (p0 + deg - step % deg) % deg
            } else {
                (p0 + step) % deg
            };
            let dd = rot[pos];
            let tgt = d.target(dd);
            if !seen[idx(tgt)] {
                seen[idx(tgt)] = true;
                tr.order.push(tgt);
                tr.entry.push(d.twin(dd));
            }
            on_dart(&tr, dd);
        }
    }
    tr
}

fn encode(d: &Drawing, cand: Candidate, mark: Option<EdgeId>) -> Vec<u32> {
    let mut seg_new = vec![u32::MAX; d.planar_edges()];
    let mut next_seg = 0u32;
    let mut code: Vec<u32> = Vec::with_capacity(2 * d.planar_nodes() + d.dart_count());
    let mut last_emitted = usize::MAX;
    traverse(d, cand, |tr, dd| {
        // emit the node header the first time a dart of a new node comes up
        let cur = tr.order.len();
        let _ = cur;
        let node = d.origin(dd);
        let node_pos = tr
            .order
            .iter()
            .position(|&n| n == node)
            .expect("processing order");
        if node_pos != last_emitted {
            last_emitted = node_pos;
            code.push(node_kind(d, node, cand.swap));
            code.push(d.rotation(node).len() as u32);
        }
        let seg = (dd.0 >> 1) as usize;
        if seg_new[seg] == u32::MAX {
            seg_new[seg] = next_seg;
            next_seg += 1;
        }
        let marked = mark == Some(d.dart_edge(dd));
        code.push(seg_new[seg] * 2 + marked as u32);
    });
    code
}

/// Rebuild the drawing with ids renamed along the winning traversal.
fn relabel(d: &Drawing, cand: Candidate) -> DrawingSpec {
    let mut v_new: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    let mut x_new: BTreeMap<CrossingId, CrossingId> = BTreeMap::new();
    let mut e_new: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
    let mut rotations: BTreeMap<Node, Vec<DartId>> = BTreeMap::new();

    let tr = traverse(d, cand, |_tr, dd| {
        let e = d.dart_edge(dd);
        if !e_new.contains_key(&e) {
            let id = EdgeId(e_new.len() as u32);
            e_new.insert(e, id);
        }
        rotations.entry(d.origin(dd)).or_default().push(dd);
    });
    for node in &tr.order {
        match node {
            Node::Vertex(v) => {
                let id = VertexId(v_new.len() as u32);
                v_new.insert(*v, id);
            }
            Node::Crossing(x) => {
                let id = CrossingId(x_new.len() as u32);
                x_new.insert(*x, id);
            }
        }
    }

    let mut colors = vec![Color::Black; v_new.len()];
    for (old, new) in &v_new {
        let mut c = d.color(*old);
        if cand.swap {
            c = c.opposite();
        }
        colors[new.0 as usize] = c;
    }
    // new endpoints, sorted so the endpoint order is traversal-determined
    let mut edges = vec![(VertexId(0), VertexId(0)); e_new.len()];
    for (old, new) in &e_new {
        let [a, b] = d.edge_ends(*old);
        let (mut na, mut nb) = (v_new[&a], v_new[&b]);
        if na > nb {
            std::mem::swap(&mut na, &mut nb);
        }
        edges[new.0 as usize] = (na, nb);
    }
    let mut crossings = vec![(EdgeId(0), EdgeId(0)); x_new.len()];
    for (old, new) in &x_new {
        let [e, f] = d.crossing_edges(*old);
        let (mut ne, mut nf) = (e_new[&e], e_new[&f]);
        if ne > nf {
            std::mem::swap(&mut ne, &mut nf);
        }
        crossings[new.0 as usize] = (ne, nf);
    }

    let token_of = |dd: DartId| -> RotEntry {
        let ne = e_new[&d.dart_edge(dd)];
        match d.target(dd) {
            Node::Crossing(_) => RotEntry::IntoCrossing(ne),
            Node::Vertex(w) => {
                let nw = v_new[&w];
                let k = if edges[ne.0 as usize].0 == nw { 0 } else { 1 };
                RotEntry::Toward(ne, k)
            }
        }
    };

    let mut rot_v = vec![Vec::new(); v_new.len()];
    let mut rot_x = vec![[RotEntry::IntoCrossing(EdgeId(0)); 4]; x_new.len()];
    for (node, darts) in &rotations {
        match node {
            Node::Vertex(v) => {
                rot_v[v_new[v].0 as usize] = darts.iter().map(|&dd| token_of(dd)).collect();
            }
            Node::Crossing(x) => {
                let toks: Vec<RotEntry> = darts.iter().map(|&dd| token_of(dd)).collect();
                rot_x[x_new[x].0 as usize] = [toks[0], toks[1], toks[2], toks[3]];
            }
        }
    }
    DrawingSpec { colors, edges, crossings, rot_v, rot_x, outer: None }
}

// ---------------------------------------------------------------------------
// Orderly generation
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub enum SearchError {
    OverLimit { n: usize, limit: usize },
    Io(String),
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::OverLimit { n, limit } => write!(
                f,
                "n = {n} exceeds the configured limit {limit}; enumeration cost grows \
                 sharply with n — raise the limit explicitly if you accept the runtime"
            ),
            SearchError::Io(e) => write!(f, "checkpoint I/O: {e}"),
        }
    }
}

impl std::error::Error for SearchError {}

/// Emission filter for `enumerate_drawings` and the CLI.
#[derive(Clone, Copy, Debug, Default)]
pub struct Filter {
    pub maximal: bool,
    pub min_kappa: usize,
}

impl Filter {
    pub fn accepts(&self, d: &Drawing) -> bool {
        if self.maximal && !is_maximal(d) {
            return false;
        }
        if self.min_kappa > 0 {
            let kappa = vertex_connectivity(d).map(|r| r.kappa).unwrap_or(0);
            if kappa < self.min_kappa {
                return false;
            }
        }
        true
    }

    /// Parse CLI syntax like `maximal,kappa>=2`.
    pub fn parse(s: &str) -> Result<Filter, String> {
        let mut f = Filter::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "maximal" {
                f.maximal = true;
            } else if let Some(k) = part.strip_prefix("kappa>=") {
                f.min_kappa = k.parse().map_err(|_| format!("bad kappa bound `{part}`"))?;
            } else {
                return Err(format!("unknown filter `{part}`"));
            }
        }
        Ok(f)
    }
}

#[derive(Clone, Debug)]
pub struct EnumOptions {
    pub jobs: usize,
    pub checkpoint_dir: Option<PathBuf>,
    pub symmetry: SymmetryOpts,
    /// raise the default refusal limit (6 with crossings, 8 without)
    pub n_limit: Option<usize>,
    /// re-verify global uniqueness of emitted canonical forms
    pub audit: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            jobs: 1,
            checkpoint_dir: None,
            symmetry: SymmetryOpts::default(),
            n_limit: None,
            audit: false,
        }
    }
}

fn default_limit(max_c: usize) -> usize {
    if max_c == 0 {
        8
    } else {
        6
    }
}

/// Every connected bipartite IC-plane drawing on exactly `n` true
/// vertices with at most `max_c` crossings, one representative per
/// isomorphism class, filtered by `filter`, in canonical-form order.
pub fn enumerate_drawings(
    n: usize,
    max_c: usize,
    filter: Filter,
    opts: &EnumOptions,
) -> Result<Vec<Drawing>, SearchError> {
    let limit = opts.n_limit.unwrap_or_else(|| default_limit(max_c));
    if n > limit {
        return Err(SearchError::OverLimit { n, limit });
    }
    let max_c = max_c.min(n / 4); // cr(D) <= n/4 for IC drawings
    let all = run_levels(n, max_c, opts, &format!("enum-n{n}"))?;
    Ok(all
        .into_iter()
        .filter(|(_, d)| d.n() == n && filter.accepts(d))
        .map(|(_, d)| d)
        .collect())
}

/// Seeds for level 0: a single vertex (two of them when the color swap is
/// not part of the symmetry group).
fn seeds(sym: SymmetryOpts) -> Vec<(CanonicalForm, Drawing)> {
    let mut out = Vec::new();
    let colors = if sym.color_swap {
        vec![Color::Black]
    } else {
        vec![Color::Black, Color::White]
    };
    for c in colors {
        let spec = DrawingSpec {
            colors: vec![c],
            edges: vec![],
            crossings: vec![],
            rot_v: vec![vec![]],
            rot_x: vec![],
            outer: None,
        };
        let d = Drawing::build(&spec).unwrap();
        out.push((canonical_form(&d, sym), d));
    }
    out
}

/// Run the level generation up to `n_max` vertices and `max_c` crossings;
/// returns every enumerated drawing keyed and ordered by (edge count,
/// canonical form).
fn run_levels(
    n_max: usize,
    max_c: usize,
    opts: &EnumOptions,
    label: &str,
) -> Result<Vec<(CanonicalForm, Drawing)>, SearchError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| SearchError::Io(e.to_string()))?;

    let ckpt_path = opts
        .checkpoint_dir
        .as_ref()
        .map(|dir| dir.join(format!("mbicp-{label}-c{max_c}-swap{}.json", opts.symmetry.color_swap)));

    let mut level = 0usize;
    let mut frontier: Vec<(CanonicalForm, Drawing)> = seeds(opts.symmetry);
    let mut collected: Vec<(CanonicalForm, Drawing)> = Vec::new();

    if let Some(path) = &ckpt_path {
        if let Some(state) = load_checkpoint(path, n_max, max_c, opts.symmetry.color_swap)? {
            level = state.level;
            frontier = state
                .frontier
                .iter()
                .map(|s| {
                    let d = Drawing::parse(s).expect("checkpoint frontier parses");
                    (CanonicalForm(s.clone().into_bytes()), d)
                })
                .collect();
            collected = state
                .collected
                .iter()
                .map(|s| {
                    let d = Drawing::parse(s).expect("checkpoint collection parses");
                    (CanonicalForm(s.clone().into_bytes()), d)
                })
                .collect();
        }
    }

    while !frontier.is_empty() {
        collected.extend(frontier.iter().cloned());
        let sym = opts.symmetry;
        let merged: BTreeMap<CanonicalForm, Drawing> = pool.install(|| {
            frontier
                .par_iter()
                .map(|(_, parent)| expand_parent(parent, n_max, max_c, sym))
                .reduce(BTreeMap::new, |mut a, b| {
                    a.extend(b);
                    a
                })
        });
        frontier = merged.into_iter().collect();
        level += 1;
        if let Some(path) = &ckpt_path {
            save_checkpoint(path, n_max, max_c, opts.symmetry.color_swap, level, &frontier, &collected)?;
        }
    }

    if opts.audit {
        let mut seen = BTreeSet::new();
        for (cf, _) in &collected {
            assert!(seen.insert(cf.clone()), "duplicate canonical form emitted");
        }
    }
    Ok(collected)
}

/// All accepted, locally deduplicated children of one parent.
fn expand_parent(
    parent: &Drawing,
    n_max: usize,
    max_c: usize,
    sym: SymmetryOpts,
) -> BTreeMap<CanonicalForm, Drawing> {
    let mut out = BTreeMap::new();
    for child in children(parent, n_max, max_c) {
        debug_assert!(
            child.validate().ok,
            "{:?}\nparent:\n{}\nchild:\n{}",
            child.validate().violations,
            parent.to_icpd(),
            child.to_icpd()
        );
        let new_edge = EdgeId(child.e() as u32 - 1);
        if child_is_canonical(&child, new_edge, sym) {
            let cf = canonical_form(&child, sym);
            out.entry(cf).or_insert(child);
        }
    }
    out
}

/// Every one-edge extension of the parent: certificates between existing
/// vertices plus leaf attachments (clean or crossing a clean edge).
fn children(p: &Drawing, n_max: usize, max_c: usize) -> Vec<Drawing> {
    let mut out = Vec::new();
    for cert in addable_edges(p) {
        if let EdgeAddition::CrossingThrough { .. } = cert {
            if p.c() >= max_c || 4 * (p.c() + 1) > n_max {
                continue;
            }
        }
        out.push(apply_addition(p, &cert).expect("fresh certificate"));
    }
    if p.n() < n_max {
        let spec = p.spec();
        // clean leaf at every corner
        for u in p.vertex_ids() {
            let deg = p.degree(u);
            let slots = if deg == 0 { 1 } else { deg };
            for slot in 0..slots {
                let mut s = spec.clone();
                let w = VertexId(s.colors.len() as u32);
                s.colors.push(p.color(u).opposite());
                let ne = EdgeId(s.edges.len() as u32);
                s.edges.push((u, w));
                if deg == 0 {
                    s.rot_v[u.0 as usize] = vec![RotEntry::Toward(ne, 1)];
                } else {
                    s.rot_v[u.0 as usize].insert(slot + 1, RotEntry::Toward(ne, 1));
                }
                s.rot_v.push(vec![RotEntry::Toward(ne, 0)]);
                out.push(Drawing::build(&s).expect("leaf surgery"));
            }
        }
        // leaf behind a crossing: new vertex w, edge (u, w) crossing e
        if p.c() < max_c && 4 * (p.c() + 1) <= n_max {
            let faces = p.faces();
            for e in p.edge_ids() {
                if !p.is_clean(e) {
                    continue;
                }
                let [pp, qq] = p.edge_ends(e);
                if p.vertex_crossing(pp).is_some() || p.vertex_crossing(qq).is_some() {
                    continue;
                }
                let d0 = p.dart_from(pp, e).unwrap();
                for dart in [d0, p.twin(d0)] {
                    let f1 = faces.face_of(dart);
                    // corners of f1 host u; w lands in the face on the other side
                    for u in p.vertex_ids() {
                        if u == pp || u == qq || p.vertex_crossing(u).is_some() {
                            continue;
                        }
                        let rot = p.rotation(Node::Vertex(u));
                        for slot in 0..rot.len() {
                            if faces.face_of(rot[(slot + 1) % rot.len()]) != f1 {
                                continue;
                            }
                            let mut s = spec.clone();
                            let w = VertexId(s.colors.len() as u32);
                            s.colors.push(p.color(u).opposite());
                            let ne = EdgeId(s.edges.len() as u32);
                            s.edges.push((u, w));
                            s.crossings.push((e, ne));
                            for end in [pp, qq] {
                                let r = &mut s.rot_v[end.0 as usize];
                                let pos = r.iter().position(|t| t.edge() == e).unwrap();
                                r[pos] = RotEntry::IntoCrossing(e);
                            }
                            s.rot_v[u.0 as usize].insert(slot + 1, RotEntry::IntoCrossing(ne));
                            s.rot_v.push(vec![RotEntry::IntoCrossing(ne)]);
                            let start = p.origin(dart);
                            let idx = |v: VertexId| -> u8 {
                                if p.edge_ends(e)[0] == v {
                                    0
                                } else {
                                    1
                                }
                            };
                            let (ip, iq) = match (start, p.target(dart)) {
                                (Node::Vertex(a), Node::Vertex(b)) => (idx(a), idx(b)),
                                _ => unreachable!("clean edge"),
                            };
                            // same successor order as apply_addition:
                            // u -> q -> w -> p around the new crossing
                            s.rot_x.push([
                                RotEntry::Toward(ne, 0),
                                RotEntry::Toward(e, iq),
                                RotEntry::Toward(ne, 1),
                                RotEntry::Toward(e, ip),
                            ]);
                            out.push(Drawing::build(&s).expect("leaf crossing surgery"));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Invariant key used to pre-rank deletable edges cheaply; full marked
/// canonical forms break ties.
fn edge_key(d: &Drawing, e: EdgeId) -> (u8, usize, usize) {
    let [a, b] = d.edge_ends(e);
    let (da, db) = (d.degree(a), d.degree(b));
    (u8::from(!d.is_clean(e)), da.min(db), da.max(db))
}

/// Deleting `e` (and any endpoint left isolated) must keep the abstract
/// graph connected and non-empty.
fn edge_deletable(d: &Drawing, e: EdgeId) -> bool {
    let n = d.n();
    if d.e() == 1 {
        return true; // K2 reduces to a single vertex
    }
    let [a, b] = d.edge_ends(e);
    let dropped: Vec<bool> = (0..n)
        .map(|v| {
            let v = VertexId(v as u32);
            (v == a || v == b) && d.degree(v) == 1
        })
        .collect();
    // BFS over the graph minus e, skipping dropped vertices
    let start = (0..n).find(|&v| !dropped[v]);
    let Some(start) = start else { return false };
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![VertexId(start as u32)];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for eid in d.edge_ids() {
            if eid == e {
                continue;
            }
            let [p, q] = d.edge_ends(eid);
            for (s, t) in [(p, q), (q, p)] {
                if s == u && !dropped[t.0 as usize] && !seen[t.0 as usize] {
                    seen[t.0 as usize] = true;
                    count += 1;
                    stack.push(t);
                }
            }
        }
    }
    count == dropped.iter().filter(|&&x| !x).count()
}

/// The canonical-parent test: accept the child iff its new edge attains
/// the minimum of (key, marked canonical form) over all deletable edges.
fn child_is_canonical(x: &Drawing, new_edge: EdgeId, sym: SymmetryOpts) -> bool {
    let deletable: Vec<EdgeId> = x.edge_ids().filter(|&e| edge_deletable(x, e)).collect();
    debug_assert!(deletable.contains(&new_edge), "the new edge always reduces to the parent");
    let kn = edge_key(x, new_edge);
    let kmin = deletable.iter().map(|&e| edge_key(x, e)).min().unwrap();
    if kn > kmin {
        return false;
    }
    let ties: Vec<EdgeId> = deletable
        .into_iter()
        .filter(|&e| e != new_edge && edge_key(x, e) == kmin)
        .collect();
    if ties.is_empty() {
        return true;
    }
    let (code_new, _) = best_candidate(x, Some(new_edge), sym);
    ties.iter().all(|&e| {
        let (code, _) = best_candidate(x, Some(e), sym);
        code_new <= code
    })
}

// ---------------------------------------------------------------------------
// Checkpointing
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct Checkpoint {
    version: u32,
    n_max: usize,
    max_c: usize,
    color_swap: bool,
    level: usize,
    frontier: Vec<String>,
    collected: Vec<String>,
}

fn load_checkpoint(
    path: &Path,
    n_max: usize,
    max_c: usize,
    color_swap: bool,
) -> Result<Option<Checkpoint>, SearchError> {
    if !path.exists() {
        return Ok(None);
    }
    let text = fs::read_to_string(path).map_err(|e| SearchError::Io(e.to_string()))?;
    let ck: Checkpoint =
        serde_json::from_str(&text).map_err(|e| SearchError::Io(e.to_string()))?;
    if ck.version != 1 || ck.n_max != n_max || ck.max_c != max_c || ck.color_swap != color_swap {
        return Ok(None); // parameters changed; start over
    }
    Ok(Some(ck))
}

fn save_checkpoint(
    path: &Path,
    n_max: usize,
    max_c: usize,
    color_swap: bool,
    level: usize,
    frontier: &[(CanonicalForm, Drawing)],
    collected: &[(CanonicalForm, Drawing)],
) -> Result<(), SearchError> {
    let ck = Checkpoint {
        version: 1,
        n_max,
        max_c,
        color_swap,
        level,
        frontier: frontier.iter().map(|(cf, _)| cf.as_str().to_string()).collect(),
        collected: collected.iter().map(|(cf, _)| cf.as_str().to_string()).collect(),
    };
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| SearchError::Io(e.to_string()))?;
    }
    let tmp = path.with_extension("tmp");
    let mut f = fs::File::create(&tmp).map_err(|e| SearchError::Io(e.to_string()))?;
    f.write_all(serde_json::to_string(&ck).unwrap().as_bytes())
        .map_err(|e| SearchError::Io(e.to_string()))?;
    fs::rename(&tmp, path).map_err(|e| SearchError::Io(e.to_string()))?;
    Ok(())
}

// ---------------------------------------------------------------------------
// Minimum-size tables
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct MinSizeRow {
    pub n: usize,
    /// rows are "kappa >= t" classes for t in 1..=4
    pub kappa_class: usize,
    pub min_e: usize,
    pub witness_count: usize,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct MinSizeTable {
    pub n_max: usize,
    pub rows: Vec<MinSizeRow>,
}

impl MinSizeTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,kappa_class,min_e,witness_count,witness_file\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},kappa>={},{},{},{}\n",
                r.n,
                r.kappa_class,
                r.min_e,
                r.witness_count,
                witness_file_name(r.n, r.kappa_class)
            ));
        }
        out
    }

    pub fn write_witnesses(&self, dir: &Path) -> std::io::Result<Vec<PathBuf>> {
        fs::create_dir_all(dir)?;
        let mut paths = Vec::new();
        for r in &self.rows {
            let path = dir.join(witness_file_name(r.n, r.kappa_class));
            fs::write(&path, &r.witness)?;
            paths.push(path);
        }
        Ok(paths)
    }

    pub fn get(&self, n: usize, kappa_class: usize) -> Option<&MinSizeRow> {
        self.rows.iter().find(|r| r.n == n && r.kappa_class == kappa_class)
    }
}

pub fn witness_file_name(n: usize, kappa_class: usize) -> String {
    format!("witness_n{n}_kge{kappa_class}.icpd")
}

/// Minimum edge counts over maximal drawings, per order and connectivity
/// class, from exhaustive enumeration with the crossing budget n/4.
pub fn min_size_table(n_max: usize, opts: &EnumOptions) -> Result<MinSizeTable, SearchError> {
    let max_c = n_max / 4;
    let limit = opts.n_limit.unwrap_or_else(|| default_limit(max_c));
    if n_max > limit {
        return Err(SearchError::OverLimit { n: n_max, limit });
    }
    let all = run_levels(n_max, max_c, opts, &format!("table-n{n_max}"))?;
    #[derive(Default)]
    struct Acc {
        min_e: usize,
        witnesses: BTreeSet<CanonicalForm>,
    }
    let mut acc: BTreeMap<(usize, usize), Acc> = BTreeMap::new();
    for (cf, d) in &all {
        if d.n() < 2 || !is_maximal(d) {
            continue;
        }
        let kappa = vertex_connectivity(d).map(|r| r.kappa).unwrap_or(0);
        for t in 1..=kappa.min(4) {
            let slot = acc.entry((d.n(), t)).or_insert_with(|| Acc {
                min_e: usize::MAX,
                witnesses: BTreeSet::new(),
            });
            match d.e().cmp(&slot.min_e) {
                std::cmp::Ordering::Less => {
                    slot.min_e = d.e();
                    slot.witnesses = BTreeSet::from([cf.clone()]);
                }
                std::cmp::Ordering::Equal => {
                    slot.witnesses.insert(cf.clone());
                }
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    let rows = acc
        .into_iter()
        .map(|((n, t), a)| MinSizeRow {
            n,
            kappa_class: t,
            min_e: a.min_e,
            witness_count: a.witnesses.len(),
            witness: a.witnesses.iter().next().unwrap().as_str().to_string(),
        })
        .collect();
    Ok(MinSizeTable { n_max, rows })
}

// ---------------------------------------------------------------------------
// Crossing-free classification
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct CrossingFreeReport {
    pub n_max: usize,
    /// number of maximal crossing-free drawings per order
    pub per_n: BTreeMap<usize, usize>,
    /// ICPD of any maximal crossing-free drawing that is neither a star
    /// nor the complete K_{2,n-2}
    pub counterexamples: Vec<String>,
}

impl CrossingFreeReport {
    pub fn ok(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Check that every maximal crossing-free drawing on up to `n_max`
/// vertices is a star or a complete K_{2,n-2}.
pub fn verify_crossing_free(n_max: usize, opts: &EnumOptions) -> Result<CrossingFreeReport, SearchError> {
    let limit = opts.n_limit.unwrap_or_else(|| default_limit(0));
    if n_max > limit {
        return Err(SearchError::OverLimit { n: n_max, limit });
    }
    let all = run_levels(n_max, 0, opts, &format!("crfree-n{n_max}"))?;
    let mut per_n = BTreeMap::new();
    let mut counterexamples = Vec::new();
    for (cf, d) in &all {
        if d.n() < 2 || !is_maximal(d) {
            continue;
        }
        *per_n.entry(d.n()).or_insert(0) += 1;
        if !is_star_or_k2m(d) {
            counterexamples.push(cf.as_str().to_string());
        }
    }
    Ok(CrossingFreeReport { n_max, per_n, counterexamples })
}

/// Abstract-graph test against K_{1,n-1} and K_{2,n-2}.
pub fn is_star_or_k2m(d: &Drawing) -> bool {
    let n = d.n();
    let blacks = d.colors().iter().filter(|c| **c == Color::Black).count();
    let s = blacks.min(n - blacks);
    // connected bipartite graphs have a unique bipartition, so the color
    // classes are the partite sets
    (s == 1 && d.e() == n - 1) || (s == 2 && n >= 4 && d.e() == 2 * (n - 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_g3, gen_h};

    #[test]
    fn canonical_form_invariance() {
        let sym = SymmetryOpts::default();
        let d = gen_h(2).unwrap();
        let cf = canonical_form(&d, sym);
        // relabeling the drawing by round-tripping through the canonical
        // form is idempotent
        let d2 = cf.to_drawing();
        assert_eq!(canonical_form(&d2, sym), cf);
        // color swap collapses the two K1 seeds
        let k1 = seeds(sym);
        assert_eq!(k1.len(), 1);
        assert_eq!(seeds(SymmetryOpts { color_swap: false }).len(), 2);
    }

    #[test]
    fn tie_chiralities_are_isomorphic_as_maps() {
        // the tie is reflection-symmetric, so both chiralities of a single
        // crossing must have the same canonical form
        let d = gen_h(1).unwrap();
        let spec = d.spec();
        let mut flipped = spec.clone();
        // reverse every rotation: the mirror drawing
        for r in &mut flipped.rot_v {
            r.reverse();
        }
        for r in &mut flipped.rot_x {
            r.reverse();
        }
        let m = Drawing::build(&flipped).unwrap();
        assert!(m.validate().ok);
        let sym = SymmetryOpts::default();
        assert_eq!(canonical_form(&d, sym), canonical_form(&m, sym));
    }

    #[test]
    fn enumerate_n2() {
        let out = enumerate_drawings(2, 0, Filter::default(), &EnumOptions::default()).unwrap();
        assert_eq!(out.len(), 1, "a single edge is the only drawing on two vertices");
    }

    #[test]
    fn enumerate_n3() {
        let out = enumerate_drawings(3, 0, Filter::default(), &EnumOptions::default()).unwrap();
        // on three vertices the only connected bipartite graph is the path
        assert_eq!(out.len(), 1);
        let maximal =
            enumerate_drawings(3, 0, Filter { maximal: true, min_kappa: 0 }, &EnumOptions::default())
                .unwrap();
        assert_eq!(maximal.len(), 1, "K_{{1,2}} is maximal");
    }

    #[test]
    fn enumerate_n4_maximal_two_connected() {
        let filter = Filter { maximal: true, min_kappa: 2 };
        let out = enumerate_drawings(4, 1, filter, &EnumOptions::default()).unwrap();
        // the plane K_{2,2} and the tie
        assert_eq!(out.len(), 2, "{:?}", out.iter().map(|d| d.to_icpd()).collect::<Vec<_>>());
        assert!(out.iter().all(|d| d.e() == 4));
        let sym = SymmetryOpts::default();
        let cfs: BTreeSet<CanonicalForm> =
            out.iter().map(|d| canonical_form(d, sym)).collect();
        assert!(cfs.contains(&canonical_form(&gen_h(1).unwrap(), sym)));
    }

    #[test]
    fn over_limit_refused() {
        let err = enumerate_drawings(9, 1, Filter::default(), &EnumOptions::default());
        assert!(matches!(err, Err(SearchError::OverLimit { .. })));
    }

    #[test]
    fn min_size_small() {
        let table = min_size_table(4, &EnumOptions::default()).unwrap();
        assert_eq!(table.get(4, 2).map(|r| r.min_e), Some(4));
        assert_eq!(table.get(2, 1).map(|r| r.min_e), Some(1));
        assert!(table.get(4, 3).is_none(), "no 3-connected bipartite drawing at n = 4");
    }

    #[test]
    fn verify_crossing_free_small() {
        let rep = verify_crossing_free(5, &EnumOptions::default()).unwrap();
        assert!(rep.ok(), "{:?}", rep.counterexamples);
        assert!(rep.per_n[&4] >= 2);
    }

    #[test]
    fn g3_6_found_by_enumeration() {
        let filter = Filter { maximal: true, min_kappa: 3 };
        let out = enumerate_drawings(6, 1, filter, &EnumOptions::default()).unwrap();
        assert!(!out.is_empty());
        assert!(out.iter().all(|d| d.e() >= 9));
        let sym = SymmetryOpts::default();
        let g36 = canonical_form(&gen_g3(6).unwrap(), sym);
        assert!(out.iter().any(|d| canonical_form(d, sym) == g36));
    }
}
