//! Drawings as planarized combinatorial maps.
//!
//! A bipartite 1-plane drawing is stored as its planarization: true
//! vertices keep their color, every crossing becomes a degree-4 false
//! vertex, and every edge contributes one segment (clean) or two segments
//! (crossed). Each segment carries two darts, `2s` and `2s+1`, with
//! `twin(d) = d ^ 1`. Rotations are counterclockwise; the successor of a
//! dart in its face walk is the rotation successor of its twin, so faces
//! are traced with their interior on a fixed side. There is no
//! distinguished outer face: the map lives on the sphere, and the optional
//! `outer` index is rendering metadata only.
//!
//! The ICPD v1 text format is line oriented:
//!
//! ```text
//! icpd 1
//! vertex <id> <B|W>
//! edge <id> <vid> <vid>
//! crossing <id> <eid> <eid>
//! rot v <vid> <dart> ...
//! rot x <cid> <dart> <dart> <dart> <dart>
//! outer <face-index>        # optional
//! ```
//!
//! A dart token `<eid>.<0|1>` is the dart heading along edge `eid` toward
//! its first or second listed endpoint; `<eid>.x` is the dart from an
//! endpoint of a crossed edge heading toward the crossing. `#` starts a
//! comment. Serialization is canonical (dense ids, rotations started at
//! their least token) and `parse(serialize(d))` reproduces `d` bit for bit.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

/// Identifier of a true (colored) vertex.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct VertexId(pub u32);

/// Identifier of an edge of the abstract graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct EdgeId(pub u32);

/// Identifier of a crossing (false vertex of the planarization).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct CrossingId(pub u32);

/// Identifier of a dart (directed edge segment of the planarization).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct DartId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}
impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}
impl fmt::Display for CrossingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}
impl fmt::Display for DartId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}", self.0)
    }
}

/// Vertex color. Black is the partite set X, White is Y.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// Crossing status of an edge. At most one crossing per edge is
/// representable, which hard-codes 1-planarity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeStatus {
    Clean,
    CrossedBy(CrossingId),
}

/// A node of the planarization: a true vertex or a false one.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Node {
    Vertex(VertexId),
    Crossing(CrossingId),
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Vertex(v) => write!(f, "{v}"),
            Node::Crossing(x) => write!(f, "{x}"),
        }
    }
}

/// One rotation-list token, exactly as written in ICPD.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RotEntry {
    /// Dart heading along `edge` toward its endpoint 0 or 1. Used at
    /// vertices for clean edges and at crossings for all four segments.
    Toward(EdgeId, u8),
    /// Dart from an endpoint of a crossed edge heading into its crossing.
    IntoCrossing(EdgeId),
}

impl RotEntry {
    pub fn edge(self) -> EdgeId {
        match self {
            RotEntry::Toward(e, _) => e,
            RotEntry::IntoCrossing(e) => e,
        }
    }

    fn rank(self) -> (u32, u8) {
        match self {
            RotEntry::Toward(e, k) => (e.0, k),
            RotEntry::IntoCrossing(e) => (e.0, 2),
        }
    }
}

impl PartialOrd for RotEntry {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for RotEntry {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for RotEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RotEntry::Toward(e, k) => write!(f, "{}.{}", e.0, k),
            RotEntry::IntoCrossing(e) => write!(f, "{}.x", e.0),
        }
    }
}

/// Token-level description of a drawing; the input to [`Drawing::build`].
///
/// Edge status is derived: an edge is crossed iff it appears in
/// `crossings`. All surgery (parsing, generators, edge additions) is done
/// on specs and rebuilt, so dart bookkeeping lives in one place.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DrawingSpec {
    pub colors: Vec<Color>,
    pub edges: Vec<(VertexId, VertexId)>,
    pub crossings: Vec<(EdgeId, EdgeId)>,
    pub rot_v: Vec<Vec<RotEntry>>,
    pub rot_x: Vec<[RotEntry; 4]>,
    pub outer: Option<usize>,
}

/// Structural errors that make a spec unrepresentable as a map.
/// Semantic problems (non-bipartite, IC violations, ...) are *not* build
/// errors; they come out of [`Drawing::validate`] as data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BuildError {
    Empty,
    DanglingVertex(VertexId),
    DanglingEdge(EdgeId),
    EdgeCrossedTwice(EdgeId),
    SelfCrossingEdge(EdgeId),
    CrossedLoop(EdgeId),
    RotationArity(Node),
    BadToken { node: Node, token: RotEntry, why: &'static str },
    RotationMismatch(Node),
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::Empty => write!(f, "drawing has no vertices"),
            BuildError::DanglingVertex(v) => write!(f, "dangling vertex id {v}"),
            BuildError::DanglingEdge(e) => write!(f, "dangling edge id {e}"),
            BuildError::EdgeCrossedTwice(e) => write!(f, "edge {e} appears in two crossings"),
            BuildError::SelfCrossingEdge(e) => write!(f, "edge {e} listed as crossing itself"),
            BuildError::CrossedLoop(e) => write!(f, "crossed loop {e} is not representable"),
            BuildError::RotationArity(n) => write!(f, "rotation of {n} has the wrong length"),
            BuildError::BadToken { node, token, why } => {
                write!(f, "token {token} at {node}: {why}")
            }
            BuildError::RotationMismatch(n) => {
                write!(f, "rotation of {n} is inconsistent with edge endpoints")
            }
        }
    }
}

impl std::error::Error for BuildError {}

#[derive(Clone, Debug)]
struct Edge {
    ends: [VertexId; 2],
    status: EdgeStatus,
}

#[derive(Clone, Copy, Debug)]
struct Segment {
    edge: EdgeId,
    ends: [Node; 2],
}

/// An immutable bipartite 1-plane drawing, stored as its planarization.
///
/// Construction goes through [`Drawing::build`], which performs the
/// structural (non-semantic) validation: after it succeeds, `twin` is a
/// fixed-point-free involution and every rotation lists exactly the darts
/// that originate at its node, so face traversal is total.
#[derive(Clone, Debug)]
pub struct Drawing {
    colors: Vec<Color>,
    edges: Vec<Edge>,
    crossings: Vec<[EdgeId; 2]>,
    segments: Vec<Segment>,
    rot_v: Vec<Vec<DartId>>,
    rot_x: Vec<[DartId; 4]>,
    /// dart -> index within its origin's rotation list
    rot_pos: Vec<u32>,
    outer: Option<usize>,
}

impl Drawing {
    pub fn build(spec: &DrawingSpec) -> Result<Drawing, BuildError> {
        let n = spec.colors.len();
        if n == 0 {
            return Err(BuildError::Empty);
        }
        if spec.rot_v.len() != n {
            return Err(BuildError::RotationArity(Node::Vertex(VertexId(
                spec.rot_v.len() as u32,
            ))));
        }
        if spec.rot_x.len() != spec.crossings.len() {
            return Err(BuildError::RotationArity(Node::Crossing(CrossingId(
                spec.rot_x.len() as u32,
            ))));
        }

        let mut edges: Vec<Edge> = Vec::with_capacity(spec.edges.len());
        for &(a, b) in &spec.edges {
            for v in [a, b] {
                if v.0 as usize >= n {
                    return Err(BuildError::DanglingVertex(v));
                }
            }
            edges.push(Edge { ends: [a, b], status: EdgeStatus::Clean });
        }
        let mut crossings: Vec<[EdgeId; 2]> = Vec::with_capacity(spec.crossings.len());
        for (xi, &(e, f)) in spec.crossings.iter().enumerate() {
            let x = CrossingId(xi as u32);
            for eid in [e, f] {
                if eid.0 as usize >= edges.len() {
                    return Err(BuildError::DanglingEdge(eid));
                }
            }
            if e == f {
                return Err(BuildError::SelfCrossingEdge(e));
            }
            for eid in [e, f] {
                let slot = &mut edges[eid.0 as usize];
                if slot.status != EdgeStatus::Clean {
                    return Err(BuildError::EdgeCrossedTwice(eid));
                }
                if slot.ends[0] == slot.ends[1] {
                    return Err(BuildError::CrossedLoop(eid));
                }
                slot.status = EdgeStatus::CrossedBy(x);
            }
            crossings.push([e, f]);
        }

        // Segment layout: edges in id order; a crossed edge contributes
        // [end0 -> x] then [x -> end1].
        let mut segments: Vec<Segment> = Vec::new();
        let mut seg_of_edge: Vec<(usize, usize)> = Vec::with_capacity(edges.len()); // (first, count)
        for (ei, e) in edges.iter().enumerate() {
            let eid = EdgeId(ei as u32);
            let first = segments.len();
            match e.status {
                EdgeStatus::Clean => {
                    segments.push(Segment {
                        edge: eid,
                        ends: [Node::Vertex(e.ends[0]), Node::Vertex(e.ends[1])],
                    });
                    seg_of_edge.push((first, 1));
                }
                EdgeStatus::CrossedBy(x) => {
                    segments.push(Segment {
                        edge: eid,
                        ends: [Node::Vertex(e.ends[0]), Node::Crossing(x)],
                    });
                    segments.push(Segment {
                        edge: eid,
                        ends: [Node::Crossing(x), Node::Vertex(e.ends[1])],
                    });
                    seg_of_edge.push((first, 2));
                }
            }
        }

        // Resolve one token at one node to the dart leaving that node.
        let resolve = |node: Node, tok: RotEntry| -> Result<DartId, BuildError> {
            let bad = |why| BuildError::BadToken { node, token: tok, why };
            let e = tok.edge();
            if e.0 as usize >= edges.len() {
                return Err(BuildError::DanglingEdge(e));
            }
            let ed = &edges[e.0 as usize];
            let (first, cnt) = seg_of_edge[e.0 as usize];
            match (node, tok) {
                (Node::Vertex(v), RotEntry::Toward(_, k)) => {
                    if k > 1 {
                        return Err(bad("endpoint index must be 0 or 1"));
                    }
                    if ed.status != EdgeStatus::Clean {
                        return Err(bad("crossed edge needs an `.x` token at its endpoints"));
                    }
                    // dart from v toward endpoint k
                    let target = ed.ends[k as usize];
                    let other = ed.ends[1 - k as usize];
                    if other != v {
                        return Err(bad("vertex is not the opposite endpoint"));
                    }
                    // segment [end0, end1]; dart toward endpoint k
                    let _ = target;
                    Ok(DartId((first * 2) as u32 + if k == 1 { 0 } else { 1 }))
                }
                (Node::Vertex(v), RotEntry::IntoCrossing(_)) => {
                    if cnt != 2 {
                        return Err(bad("`.x` token on a clean edge"));
                    }
                    if ed.ends[0] == v {
                        Ok(DartId((first * 2) as u32)) // [v -> x] forward
                    } else if ed.ends[1] == v {
                        Ok(DartId(((first + 1) * 2) as u32 + 1)) // [x -> v] reversed
                    } else {
                        Err(bad("vertex is not an endpoint of this edge"))
                    }
                }
                (Node::Crossing(x), RotEntry::Toward(_, k)) => {
                    if k > 1 {
                        return Err(bad("endpoint index must be 0 or 1"));
                    }
                    if ed.status != EdgeStatus::CrossedBy(x) {
                        return Err(bad("edge does not pass through this crossing"));
                    }
                    if k == 0 {
                        Ok(DartId((first * 2) as u32 + 1)) // [end0 -> x] reversed
                    } else {
                        Ok(DartId(((first + 1) * 2) as u32)) // [x -> end1] forward
                    }
                }
                (Node::Crossing(_), RotEntry::IntoCrossing(_)) => {
                    Err(bad("`.x` token is not valid at a crossing"))
                }
            }
        };

        let dart_count = segments.len() * 2;
        let mut seen = vec![false; dart_count];
        let mut rot_v: Vec<Vec<DartId>> = Vec::with_capacity(n);
        let mut rot_x: Vec<[DartId; 4]> = Vec::with_capacity(crossings.len());
        let mut rot_pos = vec![0u32; dart_count];

        let origin_of = |d: u32| -> Node {
            let seg = segments[(d >> 1) as usize];
            seg.ends[(d & 1) as usize]
        };

        for (vi, toks) in spec.rot_v.iter().enumerate() {
            let node = Node::Vertex(VertexId(vi as u32));
            let mut darts = Vec::with_capacity(toks.len());
            for (pos, &tok) in toks.iter().enumerate() {
                let d = resolve(node, tok)?;
                if seen[d.0 as usize] || origin_of(d.0) != node {
                    return Err(BuildError::RotationMismatch(node));
                }
                seen[d.0 as usize] = true;
                rot_pos[d.0 as usize] = pos as u32;
                darts.push(d);
            }
            rot_v.push(darts);
        }
        for (xi, toks) in spec.rot_x.iter().enumerate() {
            let node = Node::Crossing(CrossingId(xi as u32));
            let mut darts = [DartId(0); 4];
            for (pos, &tok) in toks.iter().enumerate() {
                let d = resolve(node, tok)?;
                if seen[d.0 as usize] || origin_of(d.0) != node {
                    return Err(BuildError::RotationMismatch(node));
                }
                seen[d.0 as usize] = true;
                rot_pos[d.0 as usize] = pos as u32;
                darts[pos] = d;
            }
            rot_x.push(darts);
        }
        if seen.iter().any(|&s| !s) {
            // some dart never appeared in a rotation
            let d = seen.iter().position(|&s| !s).unwrap() as u32;
            return Err(BuildError::RotationMismatch(origin_of(d)));
        }

        Ok(Drawing {
            colors: spec.colors.clone(),
            edges,
            crossings,
            segments,
            rot_v,
            rot_x,
            rot_pos,
            outer: spec.outer,
        })
    }

    // ---- counts ----

    /// Number of true vertices n(G).
    pub fn n(&self) -> usize {
        self.colors.len()
    }
    /// Number of edges e(G).
    pub fn e(&self) -> usize {
        self.edges.len()
    }
    /// Number of crossings cr(D).
    pub fn c(&self) -> usize {
        self.crossings.len()
    }
    /// Nodes of the planarization, n + c.
    pub fn planar_nodes(&self) -> usize {
        self.n() + self.c()
    }
    /// Segments of the planarization, e + 2·cr.
    pub fn planar_edges(&self) -> usize {
        self.segments.len()
    }
    pub fn dart_count(&self) -> usize {
        self.segments.len() * 2
    }

    // ---- accessors ----

    pub fn color(&self, v: VertexId) -> Color {
        self.colors[v.0 as usize]
    }
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }
    pub fn edge_ends(&self, e: EdgeId) -> [VertexId; 2] {
        self.edges[e.0 as usize].ends
    }
    pub fn edge_status(&self, e: EdgeId) -> EdgeStatus {
        self.edges[e.0 as usize].status
    }
    pub fn is_clean(&self, e: EdgeId) -> bool {
        self.edge_status(e) == EdgeStatus::Clean
    }
    pub fn crossing_edges(&self, x: CrossingId) -> [EdgeId; 2] {
        self.crossings[x.0 as usize]
    }
    /// The four true endpoints N(x) of a crossing, in edge order.
    pub fn crossing_endpoints(&self, x: CrossingId) -> [VertexId; 4] {
        let [e, f] = self.crossing_edges(x);
        let [a, b] = self.edge_ends(e);
        let [c, d] = self.edge_ends(f);
        [a, b, c, d]
    }
    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len() as u32).map(EdgeId)
    }
    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.colors.len() as u32).map(VertexId)
    }
    pub fn crossing_ids(&self) -> impl Iterator<Item = CrossingId> {
        (0..self.crossings.len() as u32).map(CrossingId)
    }
    pub fn outer(&self) -> Option<usize> {
        self.outer
    }

    /// The crossing a vertex is incident to, if any. In an IC-valid
    /// drawing there is at most one; this returns the first by edge id.
    pub fn vertex_crossing(&self, v: VertexId) -> Option<CrossingId> {
        for &d in &self.rot_v[v.0 as usize] {
            if let Node::Crossing(x) = self.target(d) {
                return Some(x);
            }
        }
        None
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rot_v[v.0 as usize].len()
    }

    pub fn rotation(&self, node: Node) -> &[DartId] {
        match node {
            Node::Vertex(v) => &self.rot_v[v.0 as usize],
            Node::Crossing(x) => &self.rot_x[x.0 as usize],
        }
    }

    /// Abstract-graph neighbors of v, one entry per incident edge.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.rot_v[v.0 as usize]
            .iter()
            .map(|&d| {
                let e = self.dart_edge(d);
                let [a, b] = self.edge_ends(e);
                if a == v {
                    b
                } else {
                    a
                }
            })
            .collect()
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.edges
            .iter()
            .any(|e| e.ends == [u, v] || e.ends == [v, u])
    }

    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.edges
            .iter()
            .position(|e| e.ends == [u, v] || e.ends == [v, u])
            .map(|i| EdgeId(i as u32))
    }

    // ---- darts ----

    pub fn twin(&self, d: DartId) -> DartId {
        DartId(d.0 ^ 1)
    }
    pub fn origin(&self, d: DartId) -> Node {
        self.segments[(d.0 >> 1) as usize].ends[(d.0 & 1) as usize]
    }
    pub fn target(&self, d: DartId) -> Node {
        self.origin(self.twin(d))
    }
    pub fn dart_edge(&self, d: DartId) -> EdgeId {
        self.segments[(d.0 >> 1) as usize].edge
    }
    /// True if the dart traverses a whole (clean) edge rather than a
    /// crossing segment.
    pub fn dart_is_full_edge(&self, d: DartId) -> bool {
        self.is_clean(self.dart_edge(d))
    }

    pub fn rot_next(&self, d: DartId) -> DartId {
        let rot = self.rotation(self.origin(d));
        let i = self.rot_pos[d.0 as usize] as usize;
        rot[(i + 1) % rot.len()]
    }

    pub fn rot_prev(&self, d: DartId) -> DartId {
        let rot = self.rotation(self.origin(d));
        let i = self.rot_pos[d.0 as usize] as usize;
        rot[(i + rot.len() - 1) % rot.len()]
    }

    /// Successor of `d` along its face walk.
    pub fn face_next(&self, d: DartId) -> DartId {
        self.rot_next(self.twin(d))
    }

    /// The dart leaving a vertex along a clean edge, if the edge is clean;
    /// for a crossed edge, the dart heading into the crossing.
    pub fn dart_from(&self, v: VertexId, e: EdgeId) -> Option<DartId> {
        self.rot_v[v.0 as usize]
            .iter()
            .copied()
            .find(|&d| self.dart_edge(d) == e)
    }

    // ---- faces ----

    /// Decompose all darts into face walks. Total for every structurally
    /// valid drawing; connectivity is not required (each component simply
    /// contributes its own walks).
    pub fn faces(&self) -> Faces {
        let nd = self.dart_count();
        let mut face_of = vec![usize::MAX; nd];
        let mut walks = Vec::new();
        for d0 in 0..nd as u32 {
            if face_of[d0 as usize] != usize::MAX {
                continue;
            }
            let id = walks.len();
            let mut darts = Vec::new();
            let mut d = DartId(d0);
            loop {
                face_of[d.0 as usize] = id;
                darts.push(d);
                d = self.face_next(d);
                if d.0 == d0 {
                    break;
                }
            }
            walks.push(FaceWalk { id, darts });
        }
        Faces { walks, face_of }
    }

    /// Connected components of the planarization; returns (count, labels).
    pub fn planar_components(&self) -> (usize, Vec<usize>) {
        let total = self.planar_nodes();
        let idx = |n: Node| -> usize {
            match n {
                Node::Vertex(v) => v.0 as usize,
                Node::Crossing(x) => self.n() + x.0 as usize,
            }
        };
        let mut label = vec![usize::MAX; total];
        let mut count = 0;
        for start in 0..total {
            if label[start] != usize::MAX {
                continue;
            }
            let node = if start < self.n() {
                Node::Vertex(VertexId(start as u32))
            } else {
                Node::Crossing(CrossingId((start - self.n()) as u32))
            };
            let mut stack = vec![node];
            label[start] = count;
            while let Some(nd) = stack.pop() {
                for &d in self.rotation(nd) {
                    let t = self.target(d);
                    let ti = idx(t);
                    if label[ti] == usize::MAX {
                        label[ti] = count;
                        stack.push(t);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    /// Connected components of the abstract graph (crossings ignored).
    pub fn graph_components(&self) -> usize {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            let mut stack = vec![VertexId(start as u32)];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if label[w.0 as usize] == usize::MAX {
                        label[w.0 as usize] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        count
    }

    // ---- validation ----

    /// Full semantic validation. Pure and total: violations are data, not
    /// errors. Rules are checked in the fixed order documented on
    /// [`ValidationReport`].
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let mut push = |rule: &'static str, detail: String, objects: Vec<String>| {
            violations.push(Violation { rule, detail, objects });
        };

        // rotation-consistency: guaranteed by construction; re-verified.
        for d in 0..self.dart_count() as u32 {
            let d = DartId(d);
            if self.twin(self.twin(d)) != d || self.twin(d) == d {
                push("rotation-consistency", format!("twin broken at {d}"), vec![d.to_string()]);
            }
        }

        if self.graph_components() != 1 {
            push(
                "connected",
                format!("abstract graph has {} components", self.graph_components()),
                vec![],
            );
        }

        // simplicity
        let mut pairs = BTreeSet::new();
        for (ei, ed) in self.edges.iter().enumerate() {
            let e = EdgeId(ei as u32);
            let [a, b] = ed.ends;
            if a == b {
                push("simple", format!("loop at {a}"), vec![e.to_string(), a.to_string()]);
                continue;
            }
            let key = (a.min(b), a.max(b));
            if !pairs.insert(key) {
                push(
                    "simple",
                    format!("parallel edge {} between {} and {}", e, a, b),
                    vec![e.to_string()],
                );
            }
        }

        for (ei, ed) in self.edges.iter().enumerate() {
            let [a, b] = ed.ends;
            if a != b && self.color(a) == self.color(b) {
                push(
                    "bipartite",
                    format!("edge {} joins two {:?} vertices", EdgeId(ei as u32), self.color(a)),
                    vec![EdgeId(ei as u32).to_string(), a.to_string(), b.to_string()],
                );
            }
        }

        // crossing degree-4 alternation
        for (xi, &[e, f]) in self.crossings.iter().enumerate() {
            let x = CrossingId(xi as u32);
            let rot = &self.rot_x[xi];
            let eds: Vec<EdgeId> = rot.iter().map(|&d| self.dart_edge(d)).collect();
            let alternates = eds[0] == eds[2]
                && eds[1] == eds[3]
                && eds[0] != eds[1]
                && (eds[0] == e || eds[0] == f)
                && (eds[1] == e || eds[1] == f);
            if !alternates {
                push(
                    "crossing-alternation",
                    format!("rotation of {x} does not alternate between {e} and {f}"),
                    vec![x.to_string()],
                );
            }
        }

        // one crossing per edge: representation-enforced; assert statuses.
        for (ei, ed) in self.edges.iter().enumerate() {
            let e = EdgeId(ei as u32);
            let crossed_in = self.crossings.iter().filter(|c| c.contains(&e)).count();
            let expect = match ed.status {
                EdgeStatus::Clean => 0,
                EdgeStatus::CrossedBy(_) => 1,
            };
            if crossed_in != expect {
                push(
                    "one-crossing-per-edge",
                    format!("edge {e} status inconsistent with crossing list"),
                    vec![e.to_string()],
                );
            }
        }

        // good drawing: a crossing pair shares no endpoint
        for x in self.crossing_ids() {
            let [a, b, c, d] = self.crossing_endpoints(x);
            if a == c || a == d || b == c || b == d {
                push(
                    "good-drawing",
                    format!("crossing {x} joins two adjacent-edge endpoints"),
                    vec![x.to_string()],
                );
            }
        }

        // IC: distinct crossings have disjoint endpoint sets
        for xi in 0..self.crossings.len() {
            for xj in xi + 1..self.crossings.len() {
                let a: BTreeSet<_> =
                    self.crossing_endpoints(CrossingId(xi as u32)).into_iter().collect();
                let b = self.crossing_endpoints(CrossingId(xj as u32));
                let shared: Vec<_> = b.iter().filter(|v| a.contains(v)).collect();
                if !shared.is_empty() {
                    push(
                        "ic-disjoint-crossings",
                        format!(
                            "crossings x{} and x{} share end-vertex {}",
                            xi, xj, shared[0]
                        ),
                        vec![
                            CrossingId(xi as u32).to_string(),
                            CrossingId(xj as u32).to_string(),
                            shared[0].to_string(),
                        ],
                    );
                }
            }
        }

        // per-vertex: at most one incident crossing
        for v in self.vertex_ids() {
            let mut incident = BTreeSet::new();
            for x in self.crossing_ids() {
                if self.crossing_endpoints(x).contains(&v) {
                    incident.insert(x);
                }
            }
            if incident.len() > 1 {
                push(
                    "vertex-one-crossing",
                    format!("{v} is an end-vertex of {} crossings", incident.len()),
                    vec![v.to_string()],
                );
            }
        }

        // Euler / genus 0, per planarization component. An isolated
        // vertex carries one face the dart-orbit decomposition cannot see.
        let faces = self.faces();
        let (comps, _) = self.planar_components();
        let dartless = self.rot_v.iter().filter(|r| r.is_empty()).count() as i64;
        let euler = self.planar_nodes() as i64 - self.planar_edges() as i64
            + faces.walks.len() as i64
            + dartless;
        if euler != 2 * comps as i64 {
            push(
                "euler-genus0",
                format!("V - E + F = {euler}, expected {} for {comps} component(s)", 2 * comps),
                vec![],
            );
        }

        // cr(D) <= n/4
        if 4 * self.c() > self.n() {
            push(
                "crossing-bound",
                format!("cr = {} exceeds n/4 = {}/4", self.c(), self.n()),
                vec![],
            );
        }

        ValidationReport { ok: violations.is_empty(), violations }
    }

    // ---- planar skeleton ----

    /// Remove one edge from each crossing pair, yielding a crossing-free
    /// drawing on the same true vertices (the plane graph G_p).
    pub fn planar_skeleton(&self, rule: &RemovalRule) -> Result<Drawing, BuildError> {
        let mut remove: BTreeSet<EdgeId> = BTreeSet::new();
        for (xi, &[e, f]) in self.crossings.iter().enumerate() {
            let victim = match rule {
                RemovalRule::RemoveLowerId => e.min(f),
                RemovalRule::RemoveHigherId => e.max(f),
                RemovalRule::Explicit(list) => {
                    let v = list[xi];
                    assert!(v == e || v == f, "explicit removal {v} not in crossing x{xi}");
                    v
                }
            };
            remove.insert(victim);
        }

        let mut new_id = BTreeMap::new();
        let mut edges = Vec::new();
        for e in self.edge_ids() {
            if remove.contains(&e) {
                continue;
            }
            new_id.insert(e, EdgeId(edges.len() as u32));
            edges.push((self.edge_ends(e)[0], self.edge_ends(e)[1]));
        }

        let mut rot_v = Vec::with_capacity(self.n());
        for v in self.vertex_ids() {
            let mut toks = Vec::new();
            for &d in &self.rot_v[v.0 as usize] {
                let e = self.dart_edge(d);
                if remove.contains(&e) {
                    continue;
                }
                let [a, b] = self.edge_ends(e);
                let far = if a == v { 1 } else { 0 };
                let _ = b;
                toks.push(RotEntry::Toward(new_id[&e], far));
            }
            rot_v.push(toks);
        }

        Drawing::build(&DrawingSpec {
            colors: self.colors.clone(),
            edges,
            crossings: vec![],
            rot_v,
            rot_x: vec![],
            outer: None,
        })
    }

    // ---- spec reconstruction (for surgery) ----

    /// Token-level description of this drawing; `build` of the result
    /// reproduces the drawing exactly.
    pub fn spec(&self) -> DrawingSpec {
        let token_of = |d: DartId| -> RotEntry {
            let e = self.dart_edge(d);
            match self.target(d) {
                // A dart into a vertex always heads toward endpoint 1 when
                // it runs forward along its segment and endpoint 0 when
                // reversed; this holds for both segments of a crossed edge.
                Node::Vertex(_) => RotEntry::Toward(e, if d.0 & 1 == 0 { 1 } else { 0 }),
                Node::Crossing(_) => RotEntry::IntoCrossing(e),
            }
        };
        DrawingSpec {
            colors: self.colors.clone(),
            edges: self.edges.iter().map(|e| (e.ends[0], e.ends[1])).collect(),
            crossings: self.crossings.iter().map(|&[e, f]| (e, f)).collect(),
            rot_v: self
                .rot_v
                .iter()
                .map(|r| r.iter().map(|&d| token_of(d)).collect())
                .collect(),
            rot_x: self
                .rot_x
                .iter()
                .map(|r| {
                    [token_of(r[0]), token_of(r[1]), token_of(r[2]), token_of(r[3])]
                })
                .collect(),
            outer: self.outer,
        }
    }

    // ---- ICPD ----

    /// Canonical ICPD serialization: dense ids in order, each rotation
    /// list rotated to start at its least token.
    pub fn to_icpd(&self) -> String {
        let spec = self.spec();
        let mut out = String::from("icpd 1\n");
        for (i, c) in spec.colors.iter().enumerate() {
            let ch = match c {
                Color::Black => 'B',
                Color::White => 'W',
            };
            out.push_str(&format!("vertex {i} {ch}\n"));
        }
        for (i, (a, b)) in spec.edges.iter().enumerate() {
            out.push_str(&format!("edge {i} {} {}\n", a.0, b.0));
        }
        for (i, (e, f)) in spec.crossings.iter().enumerate() {
            out.push_str(&format!("crossing {i} {} {}\n", e.0, f.0));
        }
        let rotate_min = |toks: &[RotEntry]| -> Vec<RotEntry> {
            if toks.is_empty() {
                return vec![];
            }
            let k = toks
                .iter()
                .enumerate()
                .min_by_key(|(_, t)| **t)
                .map(|(i, _)| i)
                .unwrap();
            toks[k..].iter().chain(toks[..k].iter()).copied().collect()
        };
        for (i, toks) in spec.rot_v.iter().enumerate() {
            out.push_str(&format!("rot v {i}"));
            for t in rotate_min(toks) {
                out.push_str(&format!(" {t}"));
            }
            out.push('\n');
        }
        for (i, toks) in spec.rot_x.iter().enumerate() {
            out.push_str(&format!("rot x {i}"));
            for t in rotate_min(toks) {
                out.push_str(&format!(" {t}"));
            }
            out.push('\n');
        }
        if let Some(f) = spec.outer {
            out.push_str(&format!("outer {f}\n"));
        }
        out
    }

    /// Parse an ICPD v1 document.
    pub fn parse(input: &str) -> Result<Drawing, ParseError> {
        parse_icpd(input)
    }
}

/// One face of the drawing: a closed walk of darts. The size |F| is the
/// number of edges and edge segments on the walk, repeats counted twice —
/// exactly the number of darts.
#[derive(Clone, Debug)]
pub struct FaceWalk {
    pub id: usize,
    pub darts: Vec<DartId>,
}

impl FaceWalk {
    pub fn size(&self) -> usize {
        self.darts.len()
    }

    /// Corners of the walk: the origin of each dart, in walk order.
    pub fn corners<'a>(&'a self, d: &'a Drawing) -> impl Iterator<Item = Node> + 'a {
        self.darts.iter().map(move |&dd| d.origin(dd))
    }

    /// True vertices on the walk, with multiplicity.
    pub fn true_vertices(&self, d: &Drawing) -> Vec<VertexId> {
        self.corners(d)
            .filter_map(|n| match n {
                Node::Vertex(v) => Some(v),
                Node::Crossing(_) => None,
            })
            .collect()
    }

    /// Crossings on the walk, with multiplicity.
    pub fn crossings_on_walk(&self, d: &Drawing) -> Vec<CrossingId> {
        self.corners(d)
            .filter_map(|n| match n {
                Node::Crossing(x) => Some(x),
                Node::Vertex(_) => None,
            })
            .collect()
    }

    /// Full edges (not crossing segments) on the walk, with multiplicity.
    pub fn full_edges(&self, d: &Drawing) -> Vec<EdgeId> {
        self.darts
            .iter()
            .filter(|&&dd| d.dart_is_full_edge(dd))
            .map(|&dd| d.dart_edge(dd))
            .collect()
    }
}

/// All face walks plus a dart -> face index.
#[derive(Clone, Debug)]
pub struct Faces {
    pub walks: Vec<FaceWalk>,
    face_of: Vec<usize>,
}

impl Faces {
    pub fn len(&self) -> usize {
        self.walks.len()
    }
    pub fn is_empty(&self) -> bool {
        self.walks.is_empty()
    }
    pub fn face_of(&self, d: DartId) -> usize {
        self.face_of[d.0 as usize]
    }
    pub fn iter(&self) -> impl Iterator<Item = &FaceWalk> {
        self.walks.iter()
    }
}

/// Rule for [`Drawing::planar_skeleton`]: which edge of each crossing pair
/// to delete.
#[derive(Clone, Debug)]
pub enum RemovalRule {
    RemoveLowerId,
    RemoveHigherId,
    /// One edge per crossing, in crossing order; each must belong to its pair.
    Explicit(Vec<EdgeId>),
}

/// One violated validation rule.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub rule: &'static str,
    pub detail: String,
    pub objects: Vec<String>,
}

/// Outcome of [`Drawing::validate`]. Rules, in check order:
/// `rotation-consistency`, `connected`, `simple`, `bipartite`,
/// `crossing-alternation`, `one-crossing-per-edge`, `good-drawing`,
/// `ic-disjoint-crossings`, `vertex-one-crossing`, `euler-genus0`,
/// `crossing-bound`.
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn has(&self, rule: &str) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }
}

// ---- ICPD parser ----

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    DuplicateId(String),
    DanglingId(String),
    MissingId(String),
    Build(BuildError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number; 0 for whole-document errors.
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match &self.kind {
            ParseErrorKind::Syntax(s) => format!("syntax error: {s}"),
            ParseErrorKind::DuplicateId(s) => format!("duplicate id: {s}"),
            ParseErrorKind::DanglingId(s) => format!("dangling id: {s}"),
            ParseErrorKind::MissingId(s) => format!("missing id: {s}"),
            ParseErrorKind::Build(b) => format!("{b}"),
        };
        if self.line > 0 {
            write!(f, "line {}: {what}", self.line)
        } else {
            write!(f, "{what}")
        }
    }
}

impl std::error::Error for ParseError {}

fn parse_icpd(input: &str) -> Result<Drawing, ParseError> {
    let err = |line: usize, kind: ParseErrorKind| ParseError { line, kind };
    let syntax = |line: usize, msg: &str| err(line, ParseErrorKind::Syntax(msg.to_string()));

    let mut vertices: BTreeMap<u32, Color> = BTreeMap::new();
    let mut edges: BTreeMap<u32, (u32, u32)> = BTreeMap::new();
    let mut crossings: BTreeMap<u32, (u32, u32)> = BTreeMap::new();
    let mut rot_v: BTreeMap<u32, (usize, Vec<RotEntry>)> = BTreeMap::new();
    let mut rot_x: BTreeMap<u32, (usize, Vec<RotEntry>)> = BTreeMap::new();
    let mut outer: Option<usize> = None;
    let mut saw_header = false;

    let parse_token = |ln: usize, tok: &str| -> Result<RotEntry, ParseError> {
        let (e, end) = tok
            .split_once('.')
            .ok_or_else(|| syntax(ln, &format!("bad dart token `{tok}`")))?;
        let eid: u32 = e
            .parse()
            .map_err(|_| syntax(ln, &format!("bad edge id in dart token `{tok}`")))?;
        match end {
            "0" => Ok(RotEntry::Toward(EdgeId(eid), 0)),
            "1" => Ok(RotEntry::Toward(EdgeId(eid), 1)),
            "x" => Ok(RotEntry::IntoCrossing(EdgeId(eid))),
            _ => Err(syntax(ln, &format!("bad dart end `{end}` in `{tok}`"))),
        }
    };

    for (i, raw) in input.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let head = words.next().unwrap();
        if !saw_header {
            if head != "icpd" || words.next() != Some("1") {
                return Err(syntax(ln, "expected header `icpd 1`"));
            }
            saw_header = true;
            continue;
        }
        match head {
            "vertex" => {
                let id: u32 = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| syntax(ln, "vertex needs a numeric id"))?;
                let color = match words.next() {
                    Some("B") => Color::Black,
                    Some("W") => Color::White,
                    _ => return Err(syntax(ln, "vertex color must be B or W")),
                };
                if vertices.insert(id, color).is_some() {
                    return Err(err(ln, ParseErrorKind::DuplicateId(format!("vertex {id}"))));
                }
            }
            "edge" => {
                let id: u32 = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| syntax(ln, "edge needs a numeric id"))?;
                let a: u32 = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| syntax(ln, "edge needs two endpoint ids"))?;
                let b: u32 = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| syntax(ln, "edge needs two endpoint ids"))?;
                if edges.insert(id, (a, b)).is_some() {
                    return Err(err(ln, ParseErrorKind::DuplicateId(format!("edge {id}"))));
                }
            }
            "crossing" => {
                let id: u32 = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| syntax(ln, "crossing needs a numeric id"))?;
                let e: u32 = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| syntax(ln, "crossing needs two edge ids"))?;
                let f: u32 = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| syntax(ln, "crossing needs two edge ids"))?;
                if crossings.insert(id, (e, f)).is_some() {
                    return Err(err(ln, ParseErrorKind::DuplicateId(format!("crossing {id}"))));
                }
            }
            "rot" => {
                let kind = words
                    .next()
                    .ok_or_else(|| syntax(ln, "rot needs `v` or `x`"))?;
                let id: u32 = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| syntax(ln, "rot needs a numeric id"))?;
                let toks: Vec<RotEntry> = (&mut words)
                    .map(|w| parse_token(ln, w))
                    .collect::<Result<_, _>>()?;
                match kind {
                    "v" => {
                        if rot_v.insert(id, (ln, toks)).is_some() {
                            return Err(err(ln, ParseErrorKind::DuplicateId(format!("rot v {id}"))));
                        }
                    }
                    "x" => {
                        if toks.len() != 4 {
                            return Err(syntax(ln, "rot x needs exactly four darts"));
                        }
                        if rot_x.insert(id, (ln, toks)).is_some() {
                            return Err(err(ln, ParseErrorKind::DuplicateId(format!("rot x {id}"))));
                        }
                    }
                    _ => return Err(syntax(ln, "rot kind must be `v` or `x`")),
                }
            }
            "outer" => {
                let f: usize = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| syntax(ln, "outer needs a face index"))?;
                outer = Some(f);
            }
            other => return Err(syntax(ln, &format!("unknown directive `{other}`"))),
        }
        if words.next().is_some() {
            return Err(syntax(ln, "trailing tokens"));
        }
    }
    if !saw_header {
        return Err(syntax(0, "empty document; expected `icpd 1`"));
    }

    // Dense id check and assembly.
    fn dense<T>(m: &BTreeMap<u32, T>, what: &str) -> Result<(), ParseError> {
        for (i, k) in m.keys().enumerate() {
            if *k != i as u32 {
                return Err(ParseError {
                    line: 0,
                    kind: ParseErrorKind::MissingId(format!("{what} {i}")),
                });
            }
        }
        Ok(())
    }
    dense(&vertices, "vertex")?;
    dense(&edges, "edge")?;
    dense(&crossings, "crossing")?;

    let nv = vertices.len() as u32;
    let ne = edges.len() as u32;
    for (id, &(a, b)) in &edges {
        for v in [a, b] {
            if v >= nv {
                return Err(ParseError {
                    line: 0,
                    kind: ParseErrorKind::DanglingId(format!("vertex {v} in edge {id}")),
                });
            }
        }
    }
    for (id, &(e, f)) in &crossings {
        for eid in [e, f] {
            if eid >= ne {
                return Err(ParseError {
                    line: 0,
                    kind: ParseErrorKind::DanglingId(format!("edge {eid} in crossing {id}")),
                });
            }
        }
    }
    for (id, (ln, toks)) in rot_v.iter().chain(rot_x.iter()) {
        let _ = id;
        for t in toks {
            if t.edge().0 >= ne {
                return Err(ParseError {
                    line: *ln,
                    kind: ParseErrorKind::DanglingId(format!("edge {} in dart token", t.edge().0)),
                });
            }
        }
    }
    for v in 0..nv {
        if !rot_v.contains_key(&v) {
            return Err(ParseError {
                line: 0,
                kind: ParseErrorKind::MissingId(format!("rot v {v}")),
            });
        }
    }
    for x in 0..crossings.len() as u32 {
        if !rot_x.contains_key(&x) {
            return Err(ParseError {
                line: 0,
                kind: ParseErrorKind::MissingId(format!("rot x {x}")),
            });
        }
    }

    let spec = DrawingSpec {
        colors: vertices.values().copied().collect(),
        edges: edges
            .values()
            .map(|&(a, b)| (VertexId(a), VertexId(b)))
            .collect(),
        crossings: crossings
            .values()
            .map(|&(e, f)| (EdgeId(e), EdgeId(f)))
            .collect(),
        rot_v: rot_v.into_values().map(|(_, t)| t).collect(),
        rot_x: rot_x
            .into_values()
            .map(|(_, t)| [t[0], t[1], t[2], t[3]])
            .collect(),
        outer,
    };
    Drawing::build(&spec).map_err(|b| ParseError { line: 0, kind: ParseErrorKind::Build(b) })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plane 4-cycle: u0 W, u1 B, u2 W, u3 B.
    pub fn square() -> Drawing {
        let spec = DrawingSpec {
            colors: vec![Color::White, Color::Black, Color::White, Color::Black],
            edges: vec![
                (VertexId(0), VertexId(1)),
                (VertexId(1), VertexId(2)),
                (VertexId(2), VertexId(3)),
                (VertexId(3), VertexId(0)),
            ],
            crossings: vec![],
            rot_v: vec![
                vec![RotEntry::Toward(EdgeId(0), 1), RotEntry::Toward(EdgeId(3), 0)],
                vec![RotEntry::Toward(EdgeId(1), 1), RotEntry::Toward(EdgeId(0), 0)],
                vec![RotEntry::Toward(EdgeId(2), 1), RotEntry::Toward(EdgeId(1), 0)],
                vec![RotEntry::Toward(EdgeId(3), 1), RotEntry::Toward(EdgeId(2), 0)],
            ],
            rot_x: vec![],
            outer: None,
        };
        Drawing::build(&spec).unwrap()
    }

    #[test]
    fn square_faces_and_validate() {
        let d = square();
        assert_eq!((d.n(), d.e(), d.c()), (4, 4, 0));
        let faces = d.faces();
        assert_eq!(faces.len(), 2);
        let mut sizes: Vec<usize> = faces.iter().map(|f| f.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![4, 4]);
        let rep = d.validate();
        assert!(rep.ok, "{:?}", rep.violations);
    }

    #[test]
    fn tie_counts_and_faces() {
        let d = crate::generators::gen_h(1).unwrap();
        assert_eq!((d.n(), d.e(), d.c()), (4, 4, 1));
        let faces = d.faces();
        let mut sizes: Vec<usize> = faces.iter().map(|f| f.size()).collect();
        sizes.sort();
        // Fig. 3 of the source family: two 3-faces and the 6-walk region.
        assert_eq!(sizes, vec![3, 3, 6]);
        assert!(d.validate().ok);
    }

    #[test]
    fn face_successor_is_a_permutation() {
        for d in [square(), crate::generators::gen_h(2).unwrap()] {
            let faces = d.faces();
            let total: usize = faces.iter().map(|f| f.size()).sum();
            assert_eq!(total, d.dart_count());
            assert_eq!(total, 2 * d.planar_edges());
            for f in faces.iter() {
                let mut dd = f.darts[0];
                for _ in 0..f.size() {
                    dd = d.face_next(dd);
                }
                assert_eq!(dd, f.darts[0]);
            }
        }
    }

    #[test]
    fn icpd_round_trip() {
        for d in [
            square(),
            crate::generators::gen_h(3).unwrap(),
            crate::generators::gen_g3(8).unwrap(),
        ] {
            let text = d.to_icpd();
            let back = Drawing::parse(&text).expect("parse back");
            assert_eq!(back.to_icpd(), text, "canonical serialization round trip");
        }
    }

    #[test]
    fn parse_dangling_edge_id() {
        let doc = "icpd 1\nvertex 0 B\nvertex 1 W\nedge 0 0 1\nrot v 0 0.1\nrot v 1 0.0\ncrossing 0 0 7\nrot x 0 0.0 7.0 0.1 7.1\n";
        let e = Drawing::parse(doc).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::DanglingId(_)), "{e}");
    }

    #[test]
    fn parse_duplicate_id() {
        let doc = "icpd 1\nvertex 0 B\nvertex 0 W\n";
        let e = Drawing::parse(doc).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::DuplicateId(_)), "{e}");
        assert_eq!(e.line, 3);
    }

    #[test]
    fn parse_syntax_error_position() {
        let doc = "icpd 1\nvertex 0 B\nvertx 1 W\n";
        let e = Drawing::parse(doc).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
        assert_eq!(e.line, 3);
    }

    #[test]
    fn validate_flags_non_bipartite_and_euler() {
        // Two black vertices joined by an edge.
        let spec = DrawingSpec {
            colors: vec![Color::Black, Color::Black],
            edges: vec![(VertexId(0), VertexId(1))],
            crossings: vec![],
            rot_v: vec![
                vec![RotEntry::Toward(EdgeId(0), 1)],
                vec![RotEntry::Toward(EdgeId(0), 0)],
            ],
            rot_x: vec![],
            outer: None,
        };
        let d = Drawing::build(&spec).unwrap();
        let rep = d.validate();
        assert!(!rep.ok);
        assert!(rep.has("bipartite"));
        assert!(!rep.has("euler-genus0"));
    }

    #[test]
    fn skeleton_of_tie_is_path() {
        let d = crate::generators::gen_h(1).unwrap();
        let p = d.planar_skeleton(&RemovalRule::RemoveLowerId).unwrap();
        assert_eq!((p.n(), p.e(), p.c()), (4, 3, 0));
        assert!(p.validate().ok);
        let q = d.planar_skeleton(&RemovalRule::RemoveHigherId).unwrap();
        assert_eq!(q.e(), 3);
        assert!(q.validate().ok);
    }

    #[test]
    fn drawing_is_send_sync() {
        fn check<T: Send + Sync + Clone>() {}
        check::<Drawing>();
    }
}
