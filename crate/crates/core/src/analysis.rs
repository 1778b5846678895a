//! Face and tie taxonomy, incidence laws, connectivity and density bounds.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::embedding::{
    Color, CrossingId, Drawing, EdgeId, FaceWalk, Node, RemovalRule, VertexId,
};
use crate::maximality::is_maximal;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnalysisError {
    /// Connectivity is undefined on fewer than two vertices.
    TooSmall,
    /// The operation requires a crossing-free drawing.
    HasCrossings,
}

impl fmt::Display for AnalysisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalysisError::TooSmall => write!(f, "needs at least two vertices"),
            AnalysisError::HasCrossings => write!(f, "requires a crossing-free drawing"),
        }
    }
}

impl std::error::Error for AnalysisError {}

// ---------------------------------------------------------------------------
// Face taxonomy
// ---------------------------------------------------------------------------

/// The nine face configurations of a maximal 2-connected drawing, plus an
/// escape class for anything else (non-maximal or 1-connected inputs).
///
/// * `F3` — false 3-face: one crossing, one black and one white vertex.
/// * `A4` — false 4-face: crossing flanked by two whites, plus a black.
/// * `B4` — mirror of A4 (crossing flanked by two blacks, plus a white).
/// * `D4` — true 4-face.
/// * `F5` — false 5-face: one crossing with opposite-colored flanks.
/// * `A6` — false 6-face: two crossings, each with opposite-colored flanks.
/// * `B6` — false 6-face: one crossing visited twice (a tie's 6-patch).
/// * `D6` — false 6-face: crossing flanked by whites, three whites total.
/// * `E6` — mirror of D6 with blacks.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum FaceClass {
    F3,
    A4,
    B4,
    D4,
    F5,
    A6,
    B6,
    D6,
    E6,
    Other { size: usize, signature: String },
}

impl fmt::Display for FaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaceClass::F3 => write!(f, "F3"),
            FaceClass::A4 => write!(f, "A4"),
            FaceClass::B4 => write!(f, "B4"),
            FaceClass::D4 => write!(f, "D4"),
            FaceClass::F5 => write!(f, "F5"),
            FaceClass::A6 => write!(f, "A6"),
            FaceClass::B6 => write!(f, "B6"),
            FaceClass::D6 => write!(f, "D6"),
            FaceClass::E6 => write!(f, "E6"),
            FaceClass::Other { size, signature } => write!(f, "Other({size},{signature})"),
        }
    }
}

impl Serialize for FaceClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Boundary counts of one face: black, white, true and false vertices on
/// the walk, with multiplicity.
#[derive(Clone, Debug, Serialize)]
pub struct FaceInfo {
    pub face: usize,
    pub size: usize,
    pub l_b: usize,
    pub l_w: usize,
    pub l_t: usize,
    pub l_f: usize,
    pub class: FaceClass,
}

/// Classify one face against the nine templates.
pub fn classify_face(d: &Drawing, walk: &FaceWalk) -> FaceInfo {
    let corners: Vec<Node> = walk.corners(d).collect();
    let len = corners.len();
    let mut l_b = 0;
    let mut l_w = 0;
    let mut crossing_at: Vec<(usize, CrossingId)> = Vec::new();
    for (i, nd) in corners.iter().enumerate() {
        match nd {
            Node::Vertex(v) => match d.color(*v) {
                Color::Black => l_b += 1,
                Color::White => l_w += 1,
            },
            Node::Crossing(x) => crossing_at.push((i, *x)),
        }
    }
    let l_t = l_b + l_w;
    let l_f = crossing_at.len();
    let size = walk.size();

    let truly_distinct = {
        let set: BTreeSet<VertexId> = walk.true_vertices(d).into_iter().collect();
        set.len() == l_t
    };
    // colors of the two true corners surrounding a crossing visit
    let flanks = |i: usize| -> Option<(Color, Color)> {
        let prev = corners[(i + len - 1) % len];
        let next = corners[(i + 1) % len];
        match (prev, next) {
            (Node::Vertex(p), Node::Vertex(nx)) => Some((d.color(p), d.color(nx))),
            _ => None,
        }
    };
    let flank_pair = |i: usize, want: Option<Color>| -> bool {
        match (flanks(i), want) {
            (Some((p, nx)), Some(c)) => p == c && nx == c,
            (Some((p, nx)), None) => p != nx,
            (None, _) => false,
        }
    };

    let class = 'cls: {
        if !truly_distinct {
            break 'cls other_class(d, &corners, size);
        }
        match (size, l_f, l_b, l_w) {
            (3, 1, 1, 1) => FaceClass::F3,
            (4, 0, 2, 2) => FaceClass::D4,
            (4, 1, 1, 2) if flank_pair(crossing_at[0].0, Some(Color::White)) => FaceClass::A4,
            (4, 1, 2, 1) if flank_pair(crossing_at[0].0, Some(Color::Black)) => FaceClass::B4,
            (5, 1, 2, 2) if flank_pair(crossing_at[0].0, None) => FaceClass::F5,
            (6, 2, 2, 2) => {
                if crossing_at[0].1 == crossing_at[1].1 {
                    FaceClass::B6
                } else if flank_pair(crossing_at[0].0, None) && flank_pair(crossing_at[1].0, None)
                {
                    FaceClass::A6
                } else {
                    other_class(d, &corners, size)
                }
            }
            (6, 1, 2, 3) if flank_pair(crossing_at[0].0, Some(Color::White)) => FaceClass::D6,
            (6, 1, 3, 2) if flank_pair(crossing_at[0].0, Some(Color::Black)) => FaceClass::E6,
            _ => other_class(d, &corners, size),
        }
    };
    FaceInfo { face: walk.id, size, l_b, l_w, l_t, l_f, class }
}

fn other_class(d: &Drawing, corners: &[Node], size: usize) -> FaceClass {
    let chars: Vec<char> = corners
        .iter()
        .map(|n| match n {
            Node::Vertex(v) => match d.color(*v) {
                Color::Black => 'B',
                Color::White => 'W',
            },
            Node::Crossing(_) => 'X',
        })
        .collect();
    // rotation- and reflection-minimal signature so equal shapes agree
    let mut best: Option<String> = None;
    for rev in [false, true] {
        let mut s = chars.clone();
        if rev {
            s.reverse();
        }
        for r in 0..s.len().max(1) {
            let cand: String = s[r..].iter().chain(s[..r].iter()).collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    FaceClass::Other { size, signature: best.unwrap_or_default() }
}

pub fn classify_faces(d: &Drawing) -> Vec<FaceInfo> {
    d.faces().iter().map(|w| classify_face(d, w)).collect()
}

/// Count faces per class. The census identities
/// |F4| = |A4|+|B4|+|D4| and |F6| = |A6|+|B6|+|D6|+|E6| hold by
/// construction whenever no face lands in `Other`.
pub fn face_census(d: &Drawing) -> BTreeMap<FaceClass, usize> {
    let mut census = BTreeMap::new();
    for info in classify_faces(d) {
        *census.entry(info.class).or_insert(0) += 1;
    }
    census
}

// ---------------------------------------------------------------------------
// Tie taxonomy
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum TieClass {
    Clean,
    Bad,
    Other,
}

/// One crossing together with its tie structure. `a`/`c` are the black
/// end-vertices, `b`/`d` the white ones, with `ab` and `cd` the crossing
/// edges and `ad`, `cb` the side edges.
#[derive(Clone, Debug, Serialize)]
pub struct TieInfo {
    pub crossing: CrossingId,
    pub a: VertexId,
    pub b: VertexId,
    pub c: VertexId,
    pub d: VertexId,
    /// whether each of the regions R1 (side ad), R2 (side cb), R3 (the
    /// 6-patch) is a face of the drawing
    pub patch_faces: [bool; 3],
    /// number of regions of the tie that are not faces
    pub r: usize,
    pub class: TieClass,
    pub reason: Option<String>,
}

/// Classify the tie T(x) of a crossing.
pub fn classify_tie(d: &Drawing, x: CrossingId) -> TieInfo {
    let faces = d.faces();
    classify_tie_with(d, &faces.walks, x)
}

fn classify_tie_with(d: &Drawing, walks: &[FaceWalk], x: CrossingId) -> TieInfo {
    let [e1, e2] = d.crossing_edges(x);
    let split = |e: EdgeId| -> (VertexId, VertexId) {
        let [p, q] = d.edge_ends(e);
        if d.color(p) == Color::Black {
            (p, q)
        } else {
            (q, p)
        }
    };
    let (a, b) = split(e1);
    let (c, dd) = split(e2);

    // A 3-patch bounded by the side edge uv is a face iff some 3-walk has
    // corners {u, x, v}; the 6-patch iff some 6-walk visits x twice with
    // corners {a,b,c,d}.
    let has_3patch = |u: VertexId, v: VertexId| -> bool {
        walks.iter().any(|w| {
            w.size() == 3
                && w.crossings_on_walk(d) == vec![x]
                && {
                    let t: BTreeSet<VertexId> = w.true_vertices(d).into_iter().collect();
                    t == BTreeSet::from([u, v])
                }
        })
    };
    let has_6patch = || -> bool {
        walks.iter().any(|w| {
            w.size() == 6 && w.crossings_on_walk(d) == vec![x, x] && {
                let t: BTreeSet<VertexId> = w.true_vertices(d).into_iter().collect();
                t == BTreeSet::from([a, b, c, dd])
            }
        })
    };

    let p1 = has_3patch(a, dd);
    let p2 = has_3patch(c, b);
    let p3 = has_6patch();
    let patch_faces = [p1, p2, p3];
    let r = patch_faces.iter().filter(|f| !**f).count();

    let side_ad = d.find_edge(a, dd);
    let side_cb = d.find_edge(c, b);
    let (class, reason) = if side_ad.is_none() || side_cb.is_none() {
        (TieClass::Other, Some("missing side edge".to_string()))
    } else if !d.is_clean(side_ad.unwrap()) || !d.is_clean(side_cb.unwrap()) {
        (TieClass::Other, Some("crossed side edge".to_string()))
    } else if p1 && p2 {
        (TieClass::Clean, None)
    } else if p3 && (p1 ^ p2) {
        (TieClass::Bad, None)
    } else {
        (TieClass::Other, Some(format!("{} patches are not faces", r)))
    };

    TieInfo { crossing: x, a, b, c, d: dd, patch_faces, r, class, reason }
}

pub fn classify_ties(d: &Drawing) -> Vec<TieInfo> {
    let faces = d.faces();
    d.crossing_ids()
        .map(|x| classify_tie_with(d, &faces.walks, x))
        .collect()
}

// ---------------------------------------------------------------------------
// Check reports
// ---------------------------------------------------------------------------

/// Outcome of one guarded structural check. `ok` is meaningful only when
/// `applicable`; an inapplicable check never fails.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub applicable: bool,
    pub ok: bool,
    pub violations: Vec<String>,
}

impl CheckReport {
    fn inapplicable(id: &str, why: &str) -> CheckReport {
        CheckReport {
            id: id.to_string(),
            applicable: false,
            ok: true,
            violations: vec![format!("inapplicable: {why}")],
        }
    }
    fn from_violations(id: &str, violations: Vec<String>) -> CheckReport {
        CheckReport { id: id.to_string(), applicable: true, ok: violations.is_empty(), violations }
    }
    pub fn failed(&self) -> bool {
        self.applicable && !self.ok
    }
}

pub fn all_ok(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| !r.failed())
}

// ---------------------------------------------------------------------------
// Structural lemma suite
// ---------------------------------------------------------------------------

/// Machine checks for the structural lemmas on faces and ties: true
/// vertices occur once per walk (2-connected), opposite colors on a face
/// boundary are adjacent (maximal), every crossing closes into a tie with
/// clean side edges (maximal), no three consecutive same-colored vertices,
/// the l_t/l_f face bounds, and completeness of G[T(F)].
pub fn check_structural_lemmas(d: &Drawing) -> Vec<CheckReport> {
    let valid = d.validate().ok;
    let maximal = valid && is_maximal(d);
    let kappa = vertex_connectivity(d).map(|r| r.kappa).unwrap_or(0);
    let faces = d.faces();
    let infos: Vec<FaceInfo> = faces.iter().map(|w| classify_face(d, w)).collect();
    let mut out = Vec::new();

    // Lemma: in a 2-connected drawing every true vertex occurs exactly
    // once on each face walk it touches.
    if !valid || kappa < 2 {
        out.push(CheckReport::inapplicable("lemma-2.4", "needs a valid 2-connected drawing"));
    } else {
        let mut viol = Vec::new();
        for w in faces.iter() {
            let tv = w.true_vertices(d);
            let set: BTreeSet<VertexId> = tv.iter().copied().collect();
            if set.len() != tv.len() {
                viol.push(format!("face {} repeats a true vertex", w.id));
            }
        }
        out.push(CheckReport::from_violations("lemma-2.4", viol));
    }

    // Lemma: in a maximal drawing any two opposite-colored vertices on a
    // face boundary are adjacent.
    if !valid || !maximal {
        out.push(CheckReport::inapplicable("lemma-2.5", "needs a valid maximal drawing"));
    } else {
        let mut viol = Vec::new();
        for w in faces.iter() {
            let tv: BTreeSet<VertexId> = w.true_vertices(d).into_iter().collect();
            for &u in &tv {
                for &v in &tv {
                    if u < v && d.color(u) != d.color(v) && !d.adjacent(u, v) {
                        viol.push(format!("face {}: {} and {} not adjacent", w.id, u, v));
                    }
                }
            }
        }
        out.push(CheckReport::from_violations("lemma-2.5", viol));
    }

    // Lemma: each crossing pair induces a tie whose side edges are clean.
    if !valid || !maximal {
        out.push(CheckReport::inapplicable("lemma-2.7", "needs a valid maximal drawing"));
    } else {
        let mut viol = Vec::new();
        for x in d.crossing_ids() {
            let t = classify_tie(d, x);
            for (u, v) in [(t.a, t.d), (t.c, t.b)] {
                match d.find_edge(u, v) {
                    None => viol.push(format!("{x}: side edge {u}{v} missing")),
                    Some(e) if !d.is_clean(e) => {
                        viol.push(format!("{x}: side edge {u}{v} is crossed"))
                    }
                    _ => {}
                }
            }
        }
        out.push(CheckReport::from_violations("lemma-2.7", viol));
    }

    // Lemma: no three consecutive same-colored vertices on a boundary.
    if !valid || !maximal || kappa < 2 {
        out.push(CheckReport::inapplicable("lemma-3.1", "needs a maximal 2-connected drawing"));
    } else {
        let mut viol = Vec::new();
        for w in faces.iter() {
            let cols: Vec<Color> = w.true_vertices(d).iter().map(|&v| d.color(v)).collect();
            let m = cols.len();
            if m < 3 {
                continue;
            }
            for i in 0..m {
                if cols[i] == cols[(i + 1) % m] && cols[i] == cols[(i + 2) % m] {
                    viol.push(format!("face {}: three consecutive {:?} vertices", w.id, cols[i]));
                    break;
                }
            }
        }
        out.push(CheckReport::from_violations("lemma-3.1", viol));
    }

    // Lemma: l_f <= l_t / 2, 2 <= l_t <= 5 and l_f <= 2 on every face.
    if !valid || !maximal || kappa < 2 {
        out.push(CheckReport::inapplicable("lemma-3.4", "needs a maximal 2-connected drawing"));
    } else {
        let mut viol = Vec::new();
        for info in &infos {
            if 2 * info.l_f > info.l_t {
                viol.push(format!("face {}: l_f > l_t/2", info.face));
            }
            if info.l_t < 2 || info.l_t > 5 {
                viol.push(format!("face {}: l_t = {}", info.face, info.l_t));
            }
            if info.l_f > 2 {
                viol.push(format!("face {}: l_f = {}", info.face, info.l_f));
            }
        }
        out.push(CheckReport::from_violations("lemma-3.4", viol));
    }

    // Lemma (adjacency half): G[T(F)] is complete bipartite on the
    // boundary's color classes.
    if !valid || !maximal || kappa < 2 {
        out.push(CheckReport::inapplicable(
            "lemma-3.3-adjacency",
            "needs a maximal 2-connected drawing",
        ));
    } else {
        let mut viol = Vec::new();
        for w in faces.iter() {
            let tv: BTreeSet<VertexId> = w.true_vertices(d).into_iter().collect();
            let blacks: Vec<_> = tv.iter().filter(|&&v| d.color(v) == Color::Black).collect();
            let whites: Vec<_> = tv.iter().filter(|&&v| d.color(v) == Color::White).collect();
            for &&u in &blacks {
                for &&v in &whites {
                    if !d.adjacent(u, v) {
                        viol.push(format!("face {}: K_(lb,lw) misses {}{}", w.id, u, v));
                    }
                }
            }
        }
        out.push(CheckReport::from_violations("lemma-3.3-adjacency", viol));
    }

    out
}

// ---------------------------------------------------------------------------
// Tie/face incidence (the four incidence laws)
// ---------------------------------------------------------------------------

/// The tie/face incidence laws for maximal 2-connected drawings on at
/// least five vertices:
/// (i) each bad tie sees exactly one F3, one B6 and one face in F5∪A6;
/// (ii) each clean tie sees exactly two F3 and at most one face in D6∪E6;
/// (iii) each F5 or B6 face sees exactly one bad tie, each A6 exactly two;
/// (iv) each A4, B4, D6 or E6 face sees exactly one clean tie.
pub fn tie_face_incidence_check(d: &Drawing) -> Vec<CheckReport> {
    let ids = ["prop-3.9-i", "prop-3.9-ii", "prop-3.9-iii", "prop-3.9-iv"];
    let valid = d.validate().ok;
    let kappa = vertex_connectivity(d).map(|r| r.kappa).unwrap_or(0);
    if !valid || kappa < 2 || d.n() < 5 || !is_maximal(d) {
        return ids
            .iter()
            .map(|id| CheckReport::inapplicable(id, "needs a maximal 2-connected drawing, n >= 5"))
            .collect();
    }
    let faces = d.faces();
    let infos: Vec<FaceInfo> = faces.iter().map(|w| classify_face(d, w)).collect();
    let ties: BTreeMap<CrossingId, TieInfo> = d
        .crossing_ids()
        .map(|x| (x, classify_tie_with(d, &faces.walks, x)))
        .collect();

    // distinct faces incident with each crossing
    let mut faces_at: BTreeMap<CrossingId, BTreeSet<usize>> = BTreeMap::new();
    for w in faces.iter() {
        for x in w.crossings_on_walk(d) {
            faces_at.entry(x).or_default().insert(w.id);
        }
    }
    let class_of = |fid: usize| -> &FaceClass { &infos[fid].class };

    let mut v1 = Vec::new();
    let mut v2 = Vec::new();
    for (x, tie) in &ties {
        let incident: Vec<&FaceClass> =
            faces_at.get(x).map(|s| s.iter().map(|&f| class_of(f)).collect()).unwrap_or_default();
        let count = |c: &FaceClass| incident.iter().filter(|k| **k == c).count();
        match tie.class {
            TieClass::Bad => {
                let f5a6 = count(&FaceClass::F5) + count(&FaceClass::A6);
                if count(&FaceClass::F3) != 1 || count(&FaceClass::B6) != 1 || f5a6 != 1 {
                    v1.push(format!("bad tie {x}: incident classes {incident:?}"));
                }
            }
            TieClass::Clean => {
                let d6e6 = count(&FaceClass::D6) + count(&FaceClass::E6);
                if count(&FaceClass::F3) != 2 || d6e6 > 1 {
                    v2.push(format!("clean tie {x}: incident classes {incident:?}"));
                }
            }
            TieClass::Other => {}
        }
    }

    let mut v3 = Vec::new();
    let mut v4 = Vec::new();
    for (fid, info) in infos.iter().enumerate() {
        let walk = &faces.walks[fid];
        let distinct: BTreeSet<CrossingId> = walk.crossings_on_walk(d).into_iter().collect();
        let bad = distinct.iter().filter(|x| ties[x].class == TieClass::Bad).count();
        let clean = distinct.iter().filter(|x| ties[x].class == TieClass::Clean).count();
        match info.class {
            FaceClass::F5 | FaceClass::B6 => {
                if bad != 1 {
                    v3.push(format!("face {fid} ({}): {bad} bad ties", info.class));
                }
            }
            FaceClass::A6 => {
                if bad != 2 {
                    v3.push(format!("face {fid} (A6): {bad} bad ties"));
                }
            }
            FaceClass::A4 | FaceClass::B4 | FaceClass::D6 | FaceClass::E6 => {
                if clean != 1 {
                    v4.push(format!("face {fid} ({}): {clean} clean ties", info.class));
                }
            }
            _ => {}
        }
    }

    vec![
        CheckReport::from_violations(ids[0], v1),
        CheckReport::from_violations(ids[1], v2),
        CheckReport::from_violations(ids[2], v3),
        CheckReport::from_violations(ids[3], v4),
    ]
}

// ---------------------------------------------------------------------------
// 3-connected properties
// ---------------------------------------------------------------------------

/// Properties of maximal drawings with connectivity at least 3:
/// (i) every tie is clean; (ii) only F3/A4/B4/D4 faces occur; (iii) every
/// crossing pair is enclosed by a clean 6-cycle (assembled from its two
/// F3 faces plus its A4 and B4 faces); (iv) the planar skeleton is a
/// quadrangulation for every removal choice.
pub fn check_3conn_properties(d: &Drawing) -> Vec<CheckReport> {
    let ids = ["prop-3.10-i", "prop-3.10-ii", "prop-3.10-iii", "prop-3.10-iv"];
    let valid = d.validate().ok;
    let kappa = vertex_connectivity(d).map(|r| r.kappa).unwrap_or(0);
    if !valid || kappa < 3 || !is_maximal(d) {
        return ids
            .iter()
            .map(|id| CheckReport::inapplicable(id, "needs a maximal 3-connected drawing"))
            .collect();
    }
    let faces = d.faces();
    let infos: Vec<FaceInfo> = faces.iter().map(|w| classify_face(d, w)).collect();

    let mut v1 = Vec::new();
    for tie in classify_ties(d) {
        if tie.class != TieClass::Clean {
            v1.push(format!("tie {} is {:?}", tie.crossing, tie.class));
        }
    }

    let mut v2 = Vec::new();
    for info in &infos {
        if !matches!(info.class, FaceClass::F3 | FaceClass::A4 | FaceClass::B4 | FaceClass::D4) {
            v2.push(format!("face {} has class {}", info.face, info.class));
        }
    }

    // (iii) the four faces at each crossing assemble into a clean 6-cycle
    let mut v3 = Vec::new();
    for x in d.crossing_ids() {
        let incident: Vec<usize> = faces
            .iter()
            .filter(|w| w.crossings_on_walk(d).contains(&x))
            .map(|w| w.id)
            .collect();
        let mut classes: Vec<&FaceClass> = incident.iter().map(|&f| &infos[f].class).collect();
        classes.sort();
        let expected =
            vec![&FaceClass::F3, &FaceClass::F3, &FaceClass::A4, &FaceClass::B4];
        let mut want = expected.clone();
        want.sort();
        if classes != want {
            v3.push(format!("{x}: incident face classes {classes:?}"));
            continue;
        }
        let mut cycle_edges: BTreeSet<EdgeId> = BTreeSet::new();
        let mut all_clean = true;
        let mut total = 0usize;
        for &f in &incident {
            for e in faces.walks[f].full_edges(d) {
                all_clean &= d.is_clean(e);
                cycle_edges.insert(e);
                total += 1;
            }
        }
        if !all_clean || total != 6 || cycle_edges.len() != 6 {
            v3.push(format!("{x}: boundary edges do not form six distinct clean edges"));
            continue;
        }
        let mut deg: BTreeMap<VertexId, usize> = BTreeMap::new();
        for &e in &cycle_edges {
            for v in d.edge_ends(e) {
                *deg.entry(v).or_insert(0) += 1;
            }
        }
        let cycle_ok = deg.len() == 6 && deg.values().all(|&k| k == 2) && {
            // connected: walk from any vertex along the 6 edges
            let start = *deg.keys().next().unwrap();
            let mut seen = BTreeSet::from([start]);
            let mut frontier = vec![start];
            while let Some(u) = frontier.pop() {
                for &e in &cycle_edges {
                    let [p, q] = d.edge_ends(e);
                    for (s, t) in [(p, q), (q, p)] {
                        if s == u && seen.insert(t) {
                            frontier.push(t);
                        }
                    }
                }
            }
            seen.len() == 6
        };
        if !cycle_ok {
            v3.push(format!("{x}: enclosing edges are not a single 6-cycle"));
        }
    }

    // (iv) skeleton quadrangulation for every removal rule (all 2^c when
    // affordable, otherwise per-crossing flips around the default)
    let mut v4 = Vec::new();
    let c = d.c();
    let rules: Vec<RemovalRule> = if c <= 12 {
        (0..(1usize << c))
            .map(|mask| {
                RemovalRule::Explicit(
                    (0..c)
                        .map(|i| {
                            let [e, f] = d.crossing_edges(CrossingId(i as u32));
                            if mask >> i & 1 == 0 {
                                e
                            } else {
                                f
                            }
                        })
                        .collect(),
                )
            })
            .collect()
    } else {
        let mut rules = vec![RemovalRule::RemoveLowerId, RemovalRule::RemoveHigherId];
        for i in 0..c {
            rules.push(RemovalRule::Explicit(
                (0..c)
                    .map(|j| {
                        let [e, f] = d.crossing_edges(CrossingId(j as u32));
                        if j == i {
                            f
                        } else {
                            e
                        }
                    })
                    .collect(),
            ));
        }
        rules
    };
    for (ri, rule) in rules.iter().enumerate() {
        match d.planar_skeleton(rule) {
            Ok(skel) => match is_quadrangulation(&skel) {
                Ok(true) => {
                    if skel.e() != 2 * skel.n() - 4 {
                        v4.push(format!("rule {ri}: quadrangulation with e != 2n-4"));
                    }
                }
                Ok(false) => v4.push(format!("rule {ri}: skeleton is not a quadrangulation")),
                Err(e) => v4.push(format!("rule {ri}: {e}")),
            },
            Err(e) => v4.push(format!("rule {ri}: {e}")),
        }
    }

    vec![
        CheckReport::from_violations(ids[0], v1),
        CheckReport::from_violations(ids[1], v2),
        CheckReport::from_violations(ids[2], v3),
        CheckReport::from_violations(ids[3], v4),
    ]
}

/// True iff the crossing-free drawing has every face of size four.
pub fn is_quadrangulation(d: &Drawing) -> Result<bool, AnalysisError> {
    if d.c() != 0 {
        return Err(AnalysisError::HasCrossings);
    }
    let quad = d.faces().iter().all(|f| f.size() == 4);
    if quad && d.graph_components() == 1 && d.n() >= 4 {
        debug_assert_eq!(d.e(), 2 * d.n() - 4);
    }
    Ok(quad)
}

// ---------------------------------------------------------------------------
// Vertex connectivity
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct ConnectivityReport {
    pub kappa: usize,
    pub delta: usize,
    /// a minimum vertex cut; empty when kappa = n - 1 or the graph is
    /// already disconnected
    pub witness_cut: Vec<VertexId>,
    /// component sizes of G - witness_cut
    pub cut_sides: Vec<usize>,
}

/// Exact vertex connectivity of the abstract graph (crossings are not
/// vertices), by unit-capacity max-flow over all non-adjacent pairs.
pub fn vertex_connectivity(d: &Drawing) -> Result<ConnectivityReport, AnalysisError> {
    let n = d.n();
    if n < 2 {
        return Err(AnalysisError::TooSmall);
    }
    let adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| {
            d.neighbors(VertexId(v as u32))
                .into_iter()
                .map(|w| w.0 as usize)
                .filter(|&w| w != v)
                .collect()
        })
        .collect();
    let delta = adj.iter().map(|s| s.len()).min().unwrap_or(0);

    if d.graph_components() != 1 {
        let sides = component_sizes(&adj, &BTreeSet::new());
        return Ok(ConnectivityReport { kappa: 0, delta, witness_cut: vec![], cut_sides: sides });
    }

    let mut best: Option<(usize, usize, usize)> = None; // (flow, s, t)
    for s in 0..n {
        for t in s + 1..n {
            if adj[s].contains(&t) {
                continue;
            }
            let cap = best.map(|(f, _, _)| f);
            let flow = max_vertex_flow(&adj, s, t, cap);
            if best.map_or(true, |(f, _, _)| flow < f) {
                best = Some((flow, s, t));
            }
        }
    }
    let Some((kappa, s, t)) = best else {
        // complete graph (K2 is the only bipartite case)
        return Ok(ConnectivityReport {
            kappa: n - 1,
            delta,
            witness_cut: vec![],
            cut_sides: vec![],
        });
    };
    let cut = min_vertex_cut(&adj, s, t);
    debug_assert_eq!(cut.len(), kappa);
    let cut_set: BTreeSet<usize> = cut.iter().copied().collect();
    let sides = component_sizes(&adj, &cut_set);
    Ok(ConnectivityReport {
        kappa,
        delta,
        witness_cut: cut.into_iter().map(|v| VertexId(v as u32)).collect(),
        cut_sides: sides,
    })
}

fn component_sizes(adj: &[BTreeSet<usize>], removed: &BTreeSet<usize>) -> Vec<usize> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for s in 0..n {
        if seen[s] || removed.contains(&s) {
            continue;
        }
        let mut size = 0;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            size += 1;
            for &w in &adj[u] {
                if !seen[w] && !removed.contains(&w) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}

/// Split-vertex max flow from s to t; `stop_at` allows early exit once the
/// running minimum cannot improve.
fn max_vertex_flow(adj: &[BTreeSet<usize>], s: usize, t: usize, stop_at: Option<usize>) -> usize {
    let mut net = FlowNet::new(adj, s, t);
    let mut flow = 0;
    while net.augment() {
        flow += 1;
        if let Some(limit) = stop_at {
            if flow >= limit {
                return flow;
            }
        }
    }
    flow
}

fn min_vertex_cut(adj: &[BTreeSet<usize>], s: usize, t: usize) -> Vec<usize> {
    let mut net = FlowNet::new(adj, s, t);
    while net.augment() {}
    let reach = net.residual_reachable();
    let n = adj.len();
    let mut cut = Vec::new();
    for v in 0..n {
        if v == s || v == t {
            continue;
        }
        if reach[FlowNet::vin(v)] && !reach[FlowNet::vout(v)] {
            cut.push(v);
        }
    }
    cut
}

/// Unit-capacity split-vertex flow network on 2n nodes.
struct FlowNet {
    // arcs as (from, to, cap); residual uses the paired reverse arc
    arcs: Vec<(usize, usize, i32)>,
    head: Vec<Vec<usize>>, // node -> arc indices
    s: usize,
    t: usize,
}

impl FlowNet {
    fn vin(v: usize) -> usize {
        2 * v
    }
    fn vout(v: usize) -> usize {
        2 * v + 1
    }

    fn new(adj: &[BTreeSet<usize>], s: usize, t: usize) -> FlowNet {
        let n = adj.len();
        let mut net = FlowNet {
            arcs: Vec::new(),
            head: vec![Vec::new(); 2 * n],
            s: Self::vout(s),
            t: Self::vin(t),
        };
        let big = n as i32 + 1;
        for v in 0..n {
            net.push_arc(Self::vin(v), Self::vout(v), 1);
        }
        for (u, nbrs) in adj.iter().enumerate() {
            for &w in nbrs {
                net.push_arc(Self::vout(u), Self::vin(w), big);
            }
        }
        net
    }

    fn push_arc(&mut self, from: usize, to: usize, cap: i32) {
        let i = self.arcs.len();
        self.arcs.push((from, to, cap));
        self.arcs.push((to, from, 0));
        self.head[from].push(i);
        self.head[to].push(i + 1);
    }

    fn augment(&mut self) -> bool {
        let mut prev: Vec<Option<usize>> = vec![None; self.head.len()];
        let mut q = VecDeque::from([self.s]);
        prev[self.s] = Some(usize::MAX);
        while let Some(u) = q.pop_front() {
            if u == self.t {
                break;
            }
            for &ai in &self.head[u] {
                let (from, to, cap) = self.arcs[ai];
                if from == u && cap > 0 && prev[to].is_none() {
                    prev[to] = Some(ai);
                    q.push_back(to);
                }
            }
        }
        if prev[self.t].is_none() {
            return false;
        }
        let mut u = self.t;
        while u != self.s {
            let ai = prev[u].unwrap();
            self.arcs[ai].2 -= 1;
            self.arcs[ai ^ 1].2 += 1;
            u = self.arcs[ai].0;
        }
        true
    }

    fn residual_reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        let mut stack = vec![self.s];
        seen[self.s] = true;
        while let Some(u) = stack.pop() {
            for &ai in &self.head[u] {
                let (from, to, cap) = self.arcs[ai];
                if from == u && cap > 0 && !seen[to] {
                    seen[to] = true;
                    stack.push(to);
                }
            }
        }
        seen
    }
}

// ---------------------------------------------------------------------------
// Density bounds
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct BoundEntry {
    pub id: String,
    pub applicable: bool,
    pub satisfied: bool,
    /// e(G), exactly
    pub lhs: String,
    /// the bound, as an exact rational
    pub rhs: String,
    /// informational entries (the 4-connected conjecture) never fail a
    /// strict run
    pub enforced: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn failed(&self) -> bool {
        self.entries.iter().any(|b| b.enforced && b.applicable && !b.satisfied)
    }
    pub fn get(&self, id: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|b| b.id == id)
    }
}

/// Density bounds in exact rational arithmetic: the 9n/4 - 4 upper bound
/// (n >= 3), the 3n/2 - 2 and 2n - 3 lower bounds for maximal drawings of
/// connectivity 2 and 3, and the informational 13n/6 - 14/3 record for
/// connectivity 4.
pub fn check_bounds(d: &Drawing) -> BoundReport {
    let n = d.n() as i64;
    let e = Ratio::from_integer(d.e() as i64);
    let valid = d.validate().ok;
    let maximal = valid && is_maximal(d);
    let kappa = vertex_connectivity(d).map(|r| r.kappa).unwrap_or(0);

    let mut entries = Vec::new();
    let upper = Ratio::new(9 * n - 16, 4);
    entries.push(BoundEntry {
        id: "upper-9n4".to_string(),
        applicable: valid && n >= 3,
        satisfied: e <= upper,
        lhs: e.to_string(),
        rhs: upper.to_string(),
        enforced: true,
    });
    let lower2 = Ratio::new(3 * n - 4, 2);
    entries.push(BoundEntry {
        id: "lower2-3n2".to_string(),
        applicable: maximal && kappa >= 2,
        satisfied: e >= lower2,
        lhs: e.to_string(),
        rhs: lower2.to_string(),
        enforced: true,
    });
    let lower3 = Ratio::from_integer(2 * n - 3);
    entries.push(BoundEntry {
        id: "lower3-2n3".to_string(),
        applicable: maximal && kappa >= 3,
        satisfied: e >= lower3,
        lhs: e.to_string(),
        rhs: lower3.to_string(),
        enforced: true,
    });
    let conj = Ratio::new(13 * n - 28, 6);
    entries.push(BoundEntry {
        id: "conj4-13n6".to_string(),
        applicable: maximal && kappa >= 4,
        satisfied: e >= conj,
        lhs: e.to_string(),
        rhs: conj.to_string(),
        enforced: false,
    });
    BoundReport { entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_g3, gen_g4, gen_h, gen_k2m, gen_pdw, gen_star};

    #[test]
    fn tie_faces_classified() {
        let d = gen_h(1).unwrap();
        let census = face_census(&d);
        assert_eq!(census.get(&FaceClass::F3), Some(&2));
        assert_eq!(census.get(&FaceClass::B6), Some(&1));
    }

    #[test]
    fn tie_of_h1_is_clean_with_r0() {
        let d = gen_h(1).unwrap();
        let tie = classify_tie(&d, CrossingId(0));
        assert_eq!(tie.class, TieClass::Clean);
        assert_eq!(tie.r, 0, "all three patches are faces at n = 4");
    }

    #[test]
    fn h2_ties_are_bad() {
        let d = gen_h(2).unwrap();
        for tie in classify_ties(&d) {
            assert_eq!(tie.class, TieClass::Bad, "{:?}", tie);
            assert_eq!(tie.r, 1);
        }
    }

    #[test]
    fn census_identities() {
        for d in [gen_h(3).unwrap(), gen_g3(10).unwrap(), gen_g4(1).unwrap()] {
            let infos = classify_faces(&d);
            let count = |c: FaceClass| infos.iter().filter(|i| i.class == c).count();
            let f4 = infos.iter().filter(|i| i.size == 4).count();
            let f6 = infos.iter().filter(|i| i.size == 6).count();
            assert_eq!(
                f4,
                count(FaceClass::A4) + count(FaceClass::B4) + count(FaceClass::D4)
            );
            assert_eq!(
                f6,
                count(FaceClass::A6)
                    + count(FaceClass::B6)
                    + count(FaceClass::D6)
                    + count(FaceClass::E6)
            );
        }
    }

    #[test]
    fn star_connectivity_and_census_escape() {
        let d = gen_star(6).unwrap();
        let rep = vertex_connectivity(&d).unwrap();
        assert_eq!(rep.kappa, 1);
        assert_eq!(rep.witness_cut.len(), 1);
        // 1-connected: the single face is no template
        let census = face_census(&d);
        assert!(census.keys().all(|c| matches!(c, FaceClass::Other { .. })));
    }

    #[test]
    fn k2_connectivity() {
        let d = gen_star(2).unwrap();
        let rep = vertex_connectivity(&d).unwrap();
        assert_eq!(rep.kappa, 1);
        assert!(rep.witness_cut.is_empty(), "complete graph has no cut");
    }

    #[test]
    fn g4_connectivity_is_four() {
        let d = gen_g4(1).unwrap();
        let rep = vertex_connectivity(&d).unwrap();
        assert_eq!(rep.kappa, 4);
        assert_eq!(rep.delta, 4);
        assert_eq!(rep.witness_cut.len(), 4);
        assert!(rep.cut_sides.len() >= 2, "removing the witness disconnects");
    }

    #[test]
    fn quadrangulation_checks() {
        assert!(is_quadrangulation(&gen_pdw(8).unwrap()).unwrap());
        assert!(is_quadrangulation(&gen_g3(8).unwrap()).is_err());
        let skel = gen_g3(8).unwrap().planar_skeleton(&RemovalRule::RemoveLowerId).unwrap();
        assert!(is_quadrangulation(&skel).unwrap());
        assert_eq!(skel.e(), 12);
        // a plain hexagon is not a quadrangulation
        let mut spec = crate::embedding::DrawingSpec::default();
        for i in 0..6 {
            spec.colors.push(if i % 2 == 0 { Color::Black } else { Color::White });
        }
        for i in 0..6u32 {
            spec.edges.push((VertexId(i), VertexId((i + 1) % 6)));
        }
        for i in 0..6u32 {
            spec.rot_v.push(vec![
                crate::embedding::RotEntry::Toward(EdgeId(i), 1),
                crate::embedding::RotEntry::Toward(EdgeId((i + 5) % 6), 0),
            ]);
        }
        let hex = Drawing::build(&spec).unwrap();
        assert!(!is_quadrangulation(&hex).unwrap());
    }

    #[test]
    fn bounds_on_families() {
        for k in 1..=5 {
            let rep = check_bounds(&gen_h(k).unwrap());
            let b = rep.get("lower2-3n2").unwrap();
            assert!(b.applicable && b.satisfied);
            assert_eq!(b.lhs, b.rhs, "H_k is tight for the 2-connected bound");
        }
        let rep = check_bounds(&gen_g3(6).unwrap());
        let b = rep.get("lower3-2n3").unwrap();
        assert!(b.applicable && b.satisfied);
        assert_eq!(b.lhs, b.rhs, "K_{{3,3}} is tight for the 3-connected bound");
        // G_10 itself is not maximal; its saturation still satisfies the bound
        let sat = crate::maximality::saturate(
            &gen_g3(10).unwrap(),
            crate::maximality::ChoicePolicy::Lexicographic,
        );
        let rep = check_bounds(&sat);
        let b = rep.get("lower3-2n3").unwrap();
        assert!(b.applicable && b.satisfied);
        let rep = check_bounds(&gen_g4(1).unwrap());
        let b = rep.get("conj4-13n6").unwrap();
        assert!(b.applicable && !b.enforced);
        assert_eq!(b.lhs, b.rhs, "G_k meets the conjectured bound with equality");
    }

    #[test]
    fn lemma_suite_on_families() {
        for d in [gen_h(3).unwrap(), gen_g3(10).unwrap(), gen_k2m(5).unwrap()] {
            let reports = check_structural_lemmas(&d);
            assert!(all_ok(&reports), "{reports:?}");
        }
    }

    #[test]
    fn prop_3_10_on_families() {
        let sat12 = crate::maximality::saturate(
            &gen_g3(12).unwrap(),
            crate::maximality::ChoicePolicy::Lexicographic,
        );
        for d in [gen_g3(6).unwrap(), sat12, gen_g4(1).unwrap()] {
            let reports = check_3conn_properties(&d);
            assert!(reports.iter().all(|r| r.applicable), "{reports:?}");
            assert!(all_ok(&reports), "{reports:?}");
        }
        let reports = check_3conn_properties(&gen_h(2).unwrap());
        assert!(reports.iter().all(|r| !r.applicable), "kappa = 2 guard");
    }

    #[test]
    fn prop_3_9_on_families() {
        let sat10 = crate::maximality::saturate(
            &gen_g3(10).unwrap(),
            crate::maximality::ChoicePolicy::Lexicographic,
        );
        for d in [gen_h(2).unwrap(), gen_g3(6).unwrap(), sat10] {
            let reports = tie_face_incidence_check(&d);
            assert!(reports.iter().all(|r| r.applicable));
            assert!(all_ok(&reports), "{reports:?}");
        }
        let reports = tie_face_incidence_check(&gen_h(1).unwrap());
        assert!(reports.iter().all(|r| !r.applicable), "n = 4 guard");
    }

    #[test]
    fn prop_3_9_iii_fails_on_ties_with_two_blocked_patches() {
        // A maximal drawing can contain a tie whose only face among its
        // regions is the 6-patch (r = 2): in H_k for k >= 3 every interior
        // gadget tie is of that kind. The incidence law (iii) expects each
        // B6 face to see a bad tie, so it fails there; (i), (ii) and (iv)
        // are unaffected.
        let d = gen_h(3).unwrap();
        assert!(crate::maximality::is_maximal(&d));
        assert!(classify_ties(&d).iter().any(|t| t.class == TieClass::Other && t.r == 2));
        let reports = tie_face_incidence_check(&d);
        assert!(reports.iter().all(|r| r.applicable));
        assert!(reports.iter().find(|r| r.id == "prop-3.9-i").unwrap().ok);
        assert!(reports.iter().find(|r| r.id == "prop-3.9-ii").unwrap().ok);
        assert!(!reports.iter().find(|r| r.id == "prop-3.9-iii").unwrap().ok);
        assert!(reports.iter().find(|r| r.id == "prop-3.9-iv").unwrap().ok);
    }
}
