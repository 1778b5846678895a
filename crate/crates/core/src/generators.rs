//! Constructors for the extremal families.
//!
//! Every generator emits a full rotation system pinned to the concentric
//! layouts of the source figures. Nothing here is trusted: the test suite
//! re-derives validity, maximality and connectivity for every output, so
//! a transcription slip in a rotation list cannot survive.

use std::fmt;

use crate::embedding::{
    Color, Drawing, DrawingSpec, EdgeId, Node, RotEntry, VertexId,
};

/// The two four-vertex insertion configurations used to grow the H_k
/// chain. Which one applies is forced by the colors of the host 3-face:
/// `W1` attaches to a (black, white) host walk, `W2` to the mirror.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GadgetKind {
    W1,
    W2,
}

impl GadgetKind {
    pub fn for_host_color(a: Color) -> GadgetKind {
        match a {
            Color::Black => GadgetKind::W1,
            Color::White => GadgetKind::W2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenError {
    pub family: &'static str,
    pub param: usize,
    pub need: &'static str,
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}) rejected: need {}", self.family, self.param, self.need)
    }
}

impl std::error::Error for GenError {}

fn finish(mut spec: DrawingSpec, outer_hint: OuterHint) -> Drawing {
    let d = Drawing::build(&spec).expect("generator produced a malformed spec");
    debug_assert!(d.validate().ok, "generator output failed validation: {:?}", d.validate());
    if let Some(idx) = pick_outer(&d, outer_hint) {
        spec.outer = Some(idx);
        return Drawing::build(&spec).expect("outer re-tag");
    }
    d
}

enum OuterHint {
    None,
    SingleFace,
    /// Face whose corner set contains all of these vertices.
    Containing(Vec<VertexId>),
    /// Size-6 face visiting a crossing twice whose corners include these.
    TieRegion(Vec<VertexId>),
}

fn pick_outer(d: &Drawing, hint: OuterHint) -> Option<usize> {
    let faces = d.faces();
    match hint {
        OuterHint::None => None,
        OuterHint::SingleFace => Some(0),
        OuterHint::Containing(vs) => faces
            .iter()
            .find(|f| {
                let corners: Vec<Node> = f.corners(d).collect();
                vs.iter().all(|v| corners.contains(&Node::Vertex(*v)))
            })
            .map(|f| f.id),
        OuterHint::TieRegion(vs) => faces
            .iter()
            .find(|f| {
                f.size() == 6
                    && f.crossings_on_walk(d).len() == 2
                    && vs
                        .iter()
                        .all(|v| f.corners(d).any(|n| n == Node::Vertex(*v)))
            })
            .map(|f| f.id),
    }
}

/// Star K_{1,n-1} with a black center. The unique good drawing; maximal
/// and crossing-free with connectivity 1.
pub fn gen_star(n: usize) -> Result<Drawing, GenError> {
    if n < 2 {
        return Err(GenError { family: "star", param: n, need: "n >= 2" });
    }
    let mut spec = DrawingSpec::default();
    spec.colors.push(Color::Black);
    let mut center_rot = Vec::new();
    for leaf in 1..n {
        spec.colors.push(Color::White);
        let e = EdgeId(spec.edges.len() as u32);
        spec.edges.push((VertexId(0), VertexId(leaf as u32)));
        center_rot.push(RotEntry::Toward(e, 1));
        spec.rot_v.push(vec![RotEntry::Toward(e, 0)]);
    }
    spec.rot_v.insert(0, center_rot);
    Ok(finish(spec, OuterHint::SingleFace))
}

/// The planar book drawing of K_{2,m}: two white poles, m black vertices
/// on a line between them, every bounded region a 4-face. Maximal with
/// connectivity 2; e = 2m = 2n - 4.
pub fn gen_k2m(m: usize) -> Result<Drawing, GenError> {
    if m < 2 {
        return Err(GenError { family: "k2m", param: m, need: "m >= 2" });
    }
    let u = VertexId(m as u32); // top pole
    let v = VertexId(m as u32 + 1); // bottom pole
    let mut spec = DrawingSpec::default();
    spec.colors = vec![Color::Black; m];
    spec.colors.push(Color::White);
    spec.colors.push(Color::White);
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for i in 0..m {
        let eu = EdgeId(spec.edges.len() as u32);
        spec.edges.push((u, VertexId(i as u32)));
        let ev = EdgeId(spec.edges.len() as u32);
        spec.edges.push((VertexId(i as u32), v));
        spec.rot_v.push(vec![RotEntry::Toward(eu, 0), RotEntry::Toward(ev, 1)]);
        top.push(RotEntry::Toward(eu, 1));
        bottom.push(RotEntry::Toward(ev, 0));
    }
    bottom.reverse();
    spec.rot_v.push(top);
    spec.rot_v.push(bottom);
    let hint = OuterHint::Containing(vec![u, v, VertexId(0), VertexId(m as u32 - 1)]);
    Ok(finish(spec, hint))
}

/// The tie: K_{2,2} drawn with its two opposite edges crossing.
fn tie_spec() -> DrawingSpec {
    let e0 = EdgeId(0); // top (0,1)
    let e1 = EdgeId(1); // bottom (2,3)
    let e2 = EdgeId(2); // diagonal (0,3), crossed
    let e3 = EdgeId(3); // diagonal (1,2), crossed
    DrawingSpec {
        colors: vec![Color::White, Color::Black, Color::White, Color::Black],
        edges: vec![
            (VertexId(0), VertexId(1)),
            (VertexId(2), VertexId(3)),
            (VertexId(0), VertexId(3)),
            (VertexId(1), VertexId(2)),
        ],
        crossings: vec![(e2, e3)],
        rot_v: vec![
            vec![RotEntry::Toward(e0, 1), RotEntry::IntoCrossing(e2)],
            vec![RotEntry::Toward(e0, 0), RotEntry::IntoCrossing(e3)],
            vec![RotEntry::Toward(e1, 1), RotEntry::IntoCrossing(e3)],
            vec![RotEntry::Toward(e1, 0), RotEntry::IntoCrossing(e2)],
        ],
        rot_x: vec![[
            RotEntry::Toward(e3, 0),
            RotEntry::Toward(e2, 0),
            RotEntry::Toward(e3, 1),
            RotEntry::Toward(e2, 1),
        ]],
        outer: None,
    }
}

/// H_k: the 2-connected family with n = 4k and e = 6k - 2, built from the
/// tie H_1 by repeatedly inserting a gadget into the most recently
/// created false 3-face. Keeps exactly two false 3-faces at every step.
pub fn gen_h(k: usize) -> Result<Drawing, GenError> {
    if k < 1 {
        return Err(GenError { family: "H", param: k, need: "k >= 1" });
    }
    let mut spec = tie_spec();
    let mut host_edge = EdgeId(1); // the bottom edge of the tie
    for _ in 1..k {
        host_edge = insert_gadget(&mut spec, host_edge);
    }
    Ok(finish(spec, OuterHint::TieRegion(vec![VertexId(0), VertexId(1)])))
}

/// Insert a gadget (a tie plus two attachment edges) into the false
/// 3-face of `spec` whose clean edge is `host_edge`. Returns the clean
/// edge of the replacement 3-face.
fn insert_gadget(spec: &mut DrawingSpec, host_edge: EdgeId) -> EdgeId {
    let d = Drawing::build(spec).expect("host spec");
    let faces = d.faces();
    let host = faces
        .iter()
        .find(|f| f.size() == 3 && f.darts.iter().any(|&dd| d.dart_edge(dd) == host_edge))
        .expect("host 3-face");
    let p = host
        .darts
        .iter()
        .position(|&dd| d.dart_is_full_edge(dd))
        .expect("3-face has one full edge");
    let d1 = host.darts[p];
    let d2 = host.darts[(p + 1) % 3];
    let d3 = host.darts[(p + 2) % 3];
    let a = match d.origin(d1) {
        Node::Vertex(v) => v,
        _ => unreachable!(),
    };
    let b = match d.target(d1) {
        Node::Vertex(v) => v,
        _ => unreachable!(),
    };
    let edge_at_b = d.dart_edge(d2);
    let edge_at_a = d.dart_edge(d3);
    let col_a = d.color(a);
    let col_b = d.color(b);

    // Four new vertices: g1/g3 take a's color, g2/g4 take b's.
    let base = spec.colors.len() as u32;
    let (g1, g2, g3, g4) = (
        VertexId(base),
        VertexId(base + 1),
        VertexId(base + 2),
        VertexId(base + 3),
    );
    spec.colors.extend([col_a, col_b, col_a, col_b]);

    let m = spec.edges.len() as u32;
    let (t1, t2, s1, s2, att1, att2) = (
        EdgeId(m),
        EdgeId(m + 1),
        EdgeId(m + 2),
        EdgeId(m + 3),
        EdgeId(m + 4),
        EdgeId(m + 5),
    );
    spec.edges.push((g1, g4)); // crossed
    spec.edges.push((g3, g2)); // crossed
    spec.edges.push((g1, g2)); // side edge facing the host
    spec.edges.push((g3, g4)); // side edge of the new 3-face
    spec.edges.push((g1, b));
    spec.edges.push((g2, a));
    spec.crossings.push((t1, t2));

    // Splice the attachment darts into the host face corners.
    let rot_b = &mut spec.rot_v[b.0 as usize];
    let ib = rot_b.iter().position(|t| t.edge() == host_edge).unwrap();
    rot_b.insert(ib + 1, RotEntry::Toward(att1, 0));
    let rot_a = &mut spec.rot_v[a.0 as usize];
    let ia = rot_a
        .iter()
        .position(|t| *t == RotEntry::IntoCrossing(edge_at_a))
        .unwrap();
    rot_a.insert(ia + 1, RotEntry::Toward(att2, 0));
    let _ = edge_at_b;

    spec.rot_v.push(vec![
        RotEntry::Toward(att1, 1),
        RotEntry::Toward(s1, 1),
        RotEntry::IntoCrossing(t1),
    ]);
    spec.rot_v.push(vec![
        RotEntry::Toward(s1, 0),
        RotEntry::Toward(att2, 1),
        RotEntry::IntoCrossing(t2),
    ]);
    spec.rot_v.push(vec![RotEntry::IntoCrossing(t2), RotEntry::Toward(s2, 1)]);
    spec.rot_v.push(vec![RotEntry::IntoCrossing(t1), RotEntry::Toward(s2, 0)]);
    spec.rot_x.push([
        RotEntry::Toward(t1, 0),
        RotEntry::Toward(t2, 0),
        RotEntry::Toward(t1, 1),
        RotEntry::Toward(t2, 1),
    ]);
    s2
}

/// Index helpers for the pseudo double wheel: the cycle is
/// b_1 w_1 b_2 w_2 ... b_{n/2-1} w_{n/2-1}, hubs come last.
struct Wheel {
    half: usize, // n/2 - 1 = number of b's = number of w's on the cycle
}

impl Wheel {
    fn b(&self, i: usize) -> VertexId {
        // 1-based, wraps
        let i = (i - 1) % self.half;
        VertexId((2 * i) as u32)
    }
    fn w(&self, i: usize) -> VertexId {
        let i = (i - 1) % self.half;
        VertexId((2 * i + 1) as u32)
    }
    fn rb(&self, i: usize) -> EdgeId {
        // edge (b_i, w_i)
        let i = (i - 1) % self.half;
        EdgeId((2 * i) as u32)
    }
    fn rw(&self, i: usize) -> EdgeId {
        // edge (w_i, b_{i+1})
        let i = (i - 1) % self.half;
        EdgeId((2 * i + 1) as u32)
    }
    fn sb(&self, i: usize) -> EdgeId {
        // spoke (hub_b, w_i)
        let i = (i - 1) % self.half;
        EdgeId((2 * self.half + i) as u32)
    }
    fn sw(&self, i: usize) -> EdgeId {
        // spoke (hub_w, b_i)
        let i = (i - 1) % self.half;
        EdgeId((3 * self.half + i) as u32)
    }
}

fn pdw_spec(n: usize) -> DrawingSpec {
    let half = n / 2 - 1;
    let wheel = Wheel { half };
    let hub_b = VertexId((n - 2) as u32);
    let hub_w = VertexId((n - 1) as u32);
    let mut spec = DrawingSpec::default();
    for _ in 0..half {
        spec.colors.push(Color::Black);
        spec.colors.push(Color::White);
    }
    spec.colors.push(Color::Black); // inner hub
    spec.colors.push(Color::White); // outer hub
    for i in 1..=half {
        spec.edges.push((wheel.b(i), wheel.w(i)));
        spec.edges.push((wheel.w(i), wheel.b(i + 1)));
    }
    for i in 1..=half {
        spec.edges.push((hub_b, wheel.w(i)));
    }
    for i in 1..=half {
        spec.edges.push((hub_w, wheel.b(i)));
    }
    for i in 1..=half {
        // b_i: outward spoke, ring ccw, ring cw
        spec.rot_v.push(vec![
            RotEntry::Toward(wheel.sw(i), 0),
            RotEntry::Toward(wheel.rb(i), 1),
            RotEntry::Toward(wheel.rw(i + half - 1), 0),
        ]);
        // w_i: ring ccw, inward spoke, ring cw
        spec.rot_v.push(vec![
            RotEntry::Toward(wheel.rw(i), 1),
            RotEntry::Toward(wheel.sb(i), 0),
            RotEntry::Toward(wheel.rb(i), 0),
        ]);
    }
    spec.rot_v
        .push((1..=half).map(|i| RotEntry::Toward(wheel.sb(i), 1)).collect());
    // Seen from the far side of the sphere the ring runs backwards.
    let mut outer: Vec<RotEntry> = vec![RotEntry::Toward(wheel.sw(1), 1)];
    for i in (2..=half).rev() {
        outer.push(RotEntry::Toward(wheel.sw(i), 1));
    }
    spec.rot_v.push(outer);
    spec
}

/// Pseudo double wheel W_n: an (n-2)-cycle, an inner black hub joined to
/// the white cycle vertices and an outer white hub joined to the black
/// ones. A quadrangulation with e = 2n - 4; 3-connected for n >= 8.
pub fn gen_pdw(n: usize) -> Result<Drawing, GenError> {
    if n < 6 || n % 2 != 0 {
        return Err(GenError { family: "pdw", param: n, need: "even n >= 6" });
    }
    let hub_w = VertexId((n - 1) as u32);
    Ok(finish(pdw_spec(n), OuterHint::Containing(vec![hub_w])))
}

/// G_n: the pseudo double wheel plus a hub-to-hub edge crossing the cycle
/// edge b_{n/2-1} w_{n/2-1}. Maximal, 3-connected, e = 2n - 3, one
/// crossing; G_6 is K_{3,3}.
pub fn gen_g3(n: usize) -> Result<Drawing, GenError> {
    if n < 6 || n % 2 != 0 {
        return Err(GenError { family: "G3", param: n, need: "even n >= 6" });
    }
    let half = n / 2 - 1;
    let wheel = Wheel { half };
    let mut spec = pdw_spec(n);
    let hub_b = (n - 2) as u32;
    let hub_w = (n - 1) as u32;
    let crossed = wheel.rb(half); // cycle edge (b_{n/2-1}, w_{n/2-1})
    let hub_edge = EdgeId(spec.edges.len() as u32);
    spec.edges.push((VertexId(hub_b), VertexId(hub_w)));
    spec.crossings.push((crossed, hub_edge));

    // hub_b: between the spokes to w_{n/2-2} and w_{n/2-1}
    let rot = &mut spec.rot_v[hub_b as usize];
    let pos = rot
        .iter()
        .position(|t| *t == RotEntry::Toward(wheel.sb(half), 1))
        .unwrap();
    rot.insert(pos, RotEntry::IntoCrossing(hub_edge));
    // hub_w: between the spokes to b_1 and b_{n/2-1}
    let rot = &mut spec.rot_v[hub_w as usize];
    let pos = rot
        .iter()
        .position(|t| *t == RotEntry::Toward(wheel.sw(1), 1))
        .unwrap();
    rot.insert(pos + 1, RotEntry::IntoCrossing(hub_edge));
    // retarget the crossed cycle edge tokens
    for v in [wheel.b(half), wheel.w(half)] {
        let rot = &mut spec.rot_v[v.0 as usize];
        let pos = rot.iter().position(|t| t.edge() == crossed).unwrap();
        rot[pos] = RotEntry::IntoCrossing(crossed);
    }
    spec.rot_x.push([
        RotEntry::Toward(hub_edge, 1),
        RotEntry::Toward(crossed, 1),
        RotEntry::Toward(hub_edge, 0),
        RotEntry::Toward(crossed, 0),
    ]);
    Ok(finish(spec, OuterHint::Containing(vec![VertexId(hub_w)])))
}

/// G_k: the 4-connected family with n = 24k + 4 and e = 52k + 4, built
/// from concentric shells of a 4-cycle and two 12-cycles with four
/// crossing pairs per annulus. Shell s reuses the outermost 4-cycle of
/// shell s-1 as its inner ring, which realizes the recursive merge.
pub fn gen_g4(k: usize) -> Result<Drawing, GenError> {
    if k < 1 {
        return Err(GenError { family: "G4", param: k, need: "k >= 1" });
    }
    let mut colors: Vec<Color> = Vec::new();
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut crossings: Vec<(EdgeId, EdgeId)> = Vec::new();
    let mut rot_v: Vec<Vec<RotEntry>> = Vec::new();
    let mut rot_x: Vec<[RotEntry; 4]> = Vec::new();

    // innermost 4-ring; odd figure indices are white
    let ring0: Vec<VertexId> = (0..4).map(VertexId).collect();
    colors.extend([Color::White, Color::Black, Color::White, Color::Black]);
    rot_v.extend(std::iter::repeat_with(Vec::new).take(4));
    let mut ring_edges = Vec::new();
    for j in 0..4 {
        ring_edges.push(EdgeId(edges.len() as u32));
        edges.push((ring0[j], ring0[(j + 1) % 4]));
    }

    let mut below = ring0;
    let mut below_ring = ring_edges;
    for s in 0..k {
        let base = 4 + s * 24;
        let b: Vec<VertexId> = (0..12).map(|i| VertexId((base + i) as u32)).collect();
        let c: Vec<VertexId> = (0..12).map(|i| VertexId((base + 12 + i) as u32)).collect();
        for _ in 0..2 {
            for i in 0..12 {
                colors.push(if i % 2 == 0 { Color::White } else { Color::Black });
            }
        }
        let push = |edges: &mut Vec<(VertexId, VertexId)>, a: VertexId, z: VertexId| {
            let e = EdgeId(edges.len() as u32);
            edges.push((a, z));
            e
        };
        let bb: Vec<EdgeId> = (0..12).map(|i| push(&mut edges, b[i], b[(i + 1) % 12])).collect();
        let cc: Vec<EdgeId> = (0..12).map(|i| push(&mut edges, c[i], c[(i + 1) % 12])).collect();
        // spokes from the ring below, per corner j: toward b_{3j+2} and b_{3j}
        // in the 1-based figure numbering
        let spoke: Vec<[EdgeId; 2]> = (0..4)
            .map(|j| {
                let ccw = push(&mut edges, below[j], b[(3 * j + 1) % 12]);
                let cw = push(&mut edges, below[j], b[(3 * j + 11) % 12]);
                [ccw, cw]
            })
            .collect();
        // annulus edges per quadrant: two clean forks and one crossing pair
        let quad: Vec<[EdgeId; 4]> = (0..4)
            .map(|m| {
                let fork_ccw = push(&mut edges, b[3 * m], c[3 * m + 1]);
                let fork_cw = push(&mut edges, b[3 * m], c[(3 * m + 11) % 12]);
                let cross1 = push(&mut edges, b[3 * m + 1], c[3 * m + 2]);
                let cross2 = push(&mut edges, b[3 * m + 2], c[3 * m + 1]);
                crossings.push((cross1, cross2));
                [fork_ccw, fork_cw, cross1, cross2]
            })
            .collect();
        let jj: Vec<EdgeId> =
            (0..4).map(|j| push(&mut edges, c[3 * j], c[(3 * j + 3) % 12])).collect();

        let toward = |edges: &[(VertexId, VertexId)], e: EdgeId, v: VertexId| -> RotEntry {
            RotEntry::Toward(e, if edges[e.0 as usize].0 == v { 1 } else { 0 })
        };

        // ring-below rotations: fresh for the innermost ring, spliced for
        // a merged c_J vertex of the previous shell
        for j in 0..4 {
            let r = below[j];
            let spoke_ccw = toward(&edges, spoke[j][0], r);
            let spoke_cw = toward(&edges, spoke[j][1], r);
            let ring_ccw = toward(&edges, below_ring[j], r);
            let ring_cw = toward(&edges, below_ring[(j + 3) % 4], r);
            if s == 0 {
                rot_v[r.0 as usize] = vec![spoke_ccw, ring_ccw, ring_cw, spoke_cw];
            } else {
                let rot = &mut rot_v[r.0 as usize];
                let pos = rot.iter().position(|t| *t == ring_ccw).unwrap();
                rot.insert(pos, spoke_ccw);
                rot.push(spoke_cw);
                debug_assert_eq!(rot.len(), 6);
            }
        }

        for i in 0..12 {
            let v = b[i];
            let ring_ccw = toward(&edges, bb[i], v);
            let ring_cw = toward(&edges, bb[(i + 11) % 12], v);
            let m = i / 3;
            rot_v.push(match i % 3 {
                // fork b_{3m+1}: two clean edges outward
                0 => vec![
                    toward(&edges, quad[m][0], v),
                    ring_ccw,
                    ring_cw,
                    toward(&edges, quad[m][1], v),
                ],
                // b_{3m+2}: crossed edge outward, spoke inward
                1 => vec![
                    RotEntry::IntoCrossing(quad[m][2]),
                    ring_ccw,
                    toward(&edges, spoke[m][0], v),
                    ring_cw,
                ],
                // b_{3m+3}: spoke inward to the next ring corner
                _ => vec![
                    ring_ccw,
                    toward(&edges, spoke[(m + 1) % 4][1], v),
                    ring_cw,
                    RotEntry::IntoCrossing(quad[m][3]),
                ],
            });
        }

        for i in 0..12 {
            let v = c[i];
            let ring_ccw = toward(&edges, cc[i], v);
            let ring_cw = toward(&edges, cc[(i + 11) % 12], v);
            let m = i / 3;
            rot_v.push(match i % 3 {
                // c_J vertex: J arcs outermost; a following shell splices
                // its spokes in on the next pass
                0 => vec![
                    toward(&edges, jj[m], v),
                    ring_ccw,
                    ring_cw,
                    toward(&edges, jj[(m + 3) % 4], v),
                ],
                // c_{3m+2}: crossed edge to b_{3m+3}, clean fork to b_{3m+1}
                1 => vec![
                    ring_ccw,
                    RotEntry::IntoCrossing(quad[m][3]),
                    toward(&edges, quad[m][0], v),
                    ring_cw,
                ],
                // c_{3m+3}: clean fork to the next quadrant, crossed to b_{3m+2}
                _ => vec![
                    ring_ccw,
                    toward(&edges, quad[(m + 1) % 4][1], v),
                    RotEntry::IntoCrossing(quad[m][2]),
                    ring_cw,
                ],
            });
        }

        for m in 0..4 {
            rot_x.push([
                RotEntry::Toward(quad[m][2], 1),
                RotEntry::Toward(quad[m][3], 0),
                RotEntry::Toward(quad[m][2], 0),
                RotEntry::Toward(quad[m][3], 1),
            ]);
        }

        below = (0..4).map(|j| c[3 * j]).collect();
        below_ring = jj;
    }

    let spec = DrawingSpec { colors, edges, crossings, rot_v, rot_x, outer: None };
    let hint = OuterHint::Containing(below);
    Ok(finish(spec, hint))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{face_census, vertex_connectivity, FaceClass};
    use crate::maximality::is_maximal;

    #[test]
    fn star_shape() {
        let d = gen_star(6).unwrap();
        assert_eq!((d.n(), d.e(), d.c()), (6, 5, 0));
        assert!(d.validate().ok);
        assert_eq!(vertex_connectivity(&d).unwrap().kappa, 1);
        assert!(gen_star(1).is_err());
    }

    #[test]
    fn k2m_shape() {
        for m in 2..=8 {
            let d = gen_k2m(m).unwrap();
            assert_eq!((d.n(), d.e(), d.c()), (m + 2, 2 * m, 0));
            assert!(d.validate().ok, "{:?}", d.validate().violations);
            let census = face_census(&d);
            assert_eq!(census.get(&FaceClass::D4), Some(&m), "all faces D4 at m={m}");
        }
        let d = gen_k2m(4);
        assert_eq!(d.unwrap().faces().len(), 4);
    }

    #[test]
    fn h_family_counts() {
        for k in 1..=6 {
            let d = gen_h(k).unwrap();
            assert_eq!((d.n(), d.e(), d.c()), (4 * k, 6 * k - 2, k));
            assert!(d.validate().ok, "H_{k}: {:?}", d.validate().violations);
            let census = face_census(&d);
            assert_eq!(census.get(&FaceClass::F3), Some(&2), "H_{k} has exactly two F3 faces");
            if k >= 2 {
                assert_eq!(census.get(&FaceClass::B6), Some(&k));
                assert_eq!(census.get(&FaceClass::A6), Some(&(k - 1)));
                assert_eq!(census.get(&FaceClass::D4), Some(&(k - 1)));
            }
        }
    }

    #[test]
    fn pdw_is_quadrangulation() {
        for n in [6, 8, 10, 14] {
            let d = gen_pdw(n).unwrap();
            assert_eq!((d.n(), d.e(), d.c()), (n, 2 * n - 4, 0));
            assert!(d.validate().ok);
            assert!(d.faces().iter().all(|f| f.size() == 4), "W_{n} faces");
        }
        assert!(gen_pdw(7).is_err());
        assert!(gen_pdw(4).is_err());
    }

    #[test]
    fn pdw_connectivity() {
        assert_eq!(vertex_connectivity(&gen_pdw(10).unwrap()).unwrap().kappa, 3);
        assert_eq!(vertex_connectivity(&gen_pdw(8).unwrap()).unwrap().kappa, 3);
    }

    #[test]
    fn g3_counts_and_census() {
        for n in [6, 8, 10, 12] {
            let d = gen_g3(n).unwrap();
            assert_eq!((d.n(), d.e(), d.c()), (n, 2 * n - 3, 1));
            assert!(d.validate().ok, "G_{n}: {:?}", d.validate().violations);
            let census = face_census(&d);
            assert_eq!(census.get(&FaceClass::F3), Some(&2), "G_{n}");
            assert_eq!(census.get(&FaceClass::A4), Some(&1));
            assert_eq!(census.get(&FaceClass::B4), Some(&1));
        }
    }

    #[test]
    fn g3_maximality_boundary() {
        // G_6 = K_{3,3} has no missing opposite-color pair. From n = 8 on,
        // the single hub crossing leaves distant diagonal routes open: a
        // cycle diagonal can still cross a clean cycle edge whose endpoints
        // are far from the hub crossing, so the drawing is not maximal.
        assert!(is_maximal(&gen_g3(6).unwrap()));
        for n in [8, 10, 12] {
            let d = gen_g3(n).unwrap();
            let certs = crate::maximality::addable_edges(&d);
            assert!(!certs.is_empty(), "G_{n} admits a diagonal addition");
            for cert in &certs {
                let nd = crate::maximality::apply_addition(&d, cert).unwrap();
                assert!(nd.validate().ok, "the addition is a legal IC-plane drawing");
            }
        }
    }

    #[test]
    fn g3_6_is_k33() {
        let d = gen_g3(6).unwrap();
        assert_eq!(d.n(), 6);
        assert_eq!(d.e(), 9);
        for u in d.vertex_ids() {
            assert_eq!(d.degree(u), 3);
        }
        // complete bipartite: every opposite-color pair adjacent
        for u in d.vertex_ids() {
            for v in d.vertex_ids() {
                if d.color(u) != d.color(v) {
                    assert!(d.adjacent(u, v));
                }
            }
        }
    }

    #[test]
    fn g4_counts() {
        for k in 1..=2 {
            let d = gen_g4(k).unwrap();
            assert_eq!((d.n(), d.e(), d.c()), (24 * k + 4, 52 * k + 4, 4 * k));
            assert!(d.validate().ok, "G4({k}): {:?}", d.validate().violations);
        }
    }

    #[test]
    fn generators_are_maximal() {
        assert!(is_maximal(&gen_star(7).unwrap()));
        assert!(is_maximal(&gen_k2m(5).unwrap()));
        assert!(is_maximal(&gen_h(3).unwrap()));
        assert!(is_maximal(&gen_g3(6).unwrap()));
        assert!(is_maximal(&gen_g4(1).unwrap()));
        assert!(!is_maximal(&gen_pdw(10).unwrap()), "the wheel gains a hub edge by crossing");
    }
}
