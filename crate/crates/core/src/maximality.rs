//! Edge-addition certificates, maximality and saturation.
//!
//! Maximality is drawing-level: an edge is addable only if it can be
//! routed in the existing drawing, either cleanly inside one face or by
//! crossing exactly one clean edge between two faces. A certificate pins
//! the routing completely (face, insertion corners, and for a crossing
//! the side of the crossed edge, which fixes the chirality), so distinct
//! certificates give distinct maps.
//!
//! Corners are addressed by rotation slots: slot `i` at vertex `v` is the
//! gap after `rotation(v)[i]`, and belongs to the face that leaves the
//! corner through `rotation(v)[(i+1) % deg]`.

use std::fmt;

use crate::embedding::{Color, DartId, Drawing, EdgeId, Faces, Node, RotEntry, VertexId};

/// A certificate that one more edge fits into the drawing.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum EdgeAddition {
    /// Join u (black) and v (white) by a clean edge inside `face`.
    CleanInFace { face: usize, u: VertexId, v: VertexId, slot_u: usize, slot_v: usize },
    /// Join u (black, on the face left of `dart`) and v (white, on the
    /// face left of its twin) by an edge crossing the clean edge `edge`.
    CrossingThrough {
        edge: EdgeId,
        dart: DartId,
        u: VertexId,
        v: VertexId,
        slot_u: usize,
        slot_v: usize,
    },
}

#[derive(Clone, Debug)]
pub struct ApplyError(pub String);

impl fmt::Display for ApplyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "stale certificate: {}", self.0)
    }
}

impl std::error::Error for ApplyError {}

/// Deterministic saturation policies.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ChoicePolicy {
    /// Apply the lexicographically smallest certificate each round.
    #[default]
    Lexicographic,
}

/// Whether a crossing routing is drawable. When the crossed edge is a
/// bridge, both of its darts bound the same face; the cut from u's corner
/// to the crossing point splits that face into two pieces, and the twin
/// dart must fall in the same piece as v's corner (a fresh leaf endpoint
/// is unconstrained). With two distinct faces this is automatic.
pub(crate) fn crossing_route_ok(
    d: &Drawing,
    faces: &Faces,
    dart: DartId,
    u: VertexId,
    slot_u: usize,
    v_leaving: Option<DartId>,
) -> bool {
    let twin = d.twin(dart);
    if faces.face_of(dart) != faces.face_of(twin) {
        return true;
    }
    let Some(v_leave) = v_leaving else { return true };
    let walk = &faces.walks[faces.face_of(dart)].darts;
    let rot = d.rotation(Node::Vertex(u));
    let u_leave = rot[(slot_u + 1) % rot.len()];
    let pos = |target: DartId| walk.iter().position(|&x| x == target).expect("dart on walk");
    let (cu, pd, pt, cv) = (pos(u_leave), pos(dart), pos(twin), pos(v_leave));
    // cyclic membership in the arc from u's corner up to the crossed dart
    let len = walk.len();
    let in_arc = |i: usize| (i + len - cu) % len <= (pd + len - cu) % len;
    in_arc(pt) == in_arc(cv)
}

/// All corners of every face, as (vertex, slot) pairs grouped by face.
fn corners_by_face(d: &Drawing, faces: &Faces) -> Vec<Vec<(VertexId, usize)>> {
    let mut out = vec![Vec::new(); faces.len()];
    for v in d.vertex_ids() {
        let rot = d.rotation(Node::Vertex(v));
        let deg = rot.len();
        for i in 0..deg {
            let f = faces.face_of(rot[(i + 1) % deg]);
            out[f].push((v, i));
        }
    }
    out
}

/// The complete list of edge additions, one certificate per routing
/// class: per (pair, face, corner pair) for clean additions and per
/// (pair, crossed edge, side, corner pair) for crossing additions — both
/// chiralities of a new crossing are enumerated via the two darts.
pub fn addable_edges(d: &Drawing) -> Vec<EdgeAddition> {
    collect_additions(d, false)
}

/// True iff no edge can be added keeping the drawing simple, bipartite
/// and IC-plane.
pub fn is_maximal(d: &Drawing) -> bool {
    collect_additions(d, true).is_empty()
}

fn collect_additions(d: &Drawing, stop_at_first: bool) -> Vec<EdgeAddition> {
    let faces = d.faces();
    let corners = corners_by_face(d, &faces);
    let mut certs = Vec::new();

    for (f, cs) in corners.iter().enumerate() {
        for &(u, su) in cs {
            if d.color(u) != Color::Black {
                continue;
            }
            for &(v, sv) in cs {
                if d.color(v) != Color::White || d.adjacent(u, v) {
                    continue;
                }
                certs.push(EdgeAddition::CleanInFace { face: f, u, v, slot_u: su, slot_v: sv });
                if stop_at_first {
                    return certs;
                }
            }
        }
    }

    let crossing_free: Vec<bool> = d
        .vertex_ids()
        .map(|v| d.vertex_crossing(v).is_none())
        .collect();
    let free = |v: VertexId| crossing_free[v.0 as usize];

    for e in d.edge_ids() {
        if !d.is_clean(e) {
            continue;
        }
        let [p, q] = d.edge_ends(e);
        if !free(p) || !free(q) {
            continue;
        }
        let d0 = d.dart_from(p, e).expect("clean edge has a dart at each end");
        for dart in [d0, d.twin(d0)] {
            let f1 = faces.face_of(dart);
            let f2 = faces.face_of(d.twin(dart));
            for &(u, su) in &corners[f1] {
                if d.color(u) != Color::Black || u == p || u == q || !free(u) {
                    continue;
                }
                for &(v, sv) in &corners[f2] {
                    if d.color(v) != Color::White
                        || v == p
                        || v == q
                        || !free(v)
                        || d.adjacent(u, v)
                    {
                        continue;
                    }
                    let v_rot = d.rotation(Node::Vertex(v));
                    let v_leave = v_rot[(sv + 1) % v_rot.len()];
                    if !crossing_route_ok(d, &faces, dart, u, su, Some(v_leave)) {
                        continue;
                    }
                    certs.push(EdgeAddition::CrossingThrough {
                        edge: e,
                        dart,
                        u,
                        v,
                        slot_u: su,
                        slot_v: sv,
                    });
                    if stop_at_first {
                        return certs;
                    }
                }
            }
        }
    }
    certs
}

/// Apply a certificate, producing a fresh drawing with one more edge.
pub fn apply_addition(d: &Drawing, a: &EdgeAddition) -> Result<Drawing, ApplyError> {
    let faces = d.faces();
    let stale = |msg: &str| ApplyError(msg.to_string());
    let corner_face = |v: VertexId, slot: usize| -> Result<usize, ApplyError> {
        let rot = d.rotation(Node::Vertex(v));
        if slot >= rot.len() {
            return Err(stale("slot out of range"));
        }
        Ok(faces.face_of(rot[(slot + 1) % rot.len()]))
    };
    let mut spec = d.spec();
    match *a {
        EdgeAddition::CleanInFace { face, u, v, slot_u, slot_v } => {
            if u == v || d.color(u) == d.color(v) {
                return Err(stale("endpoints must be distinct and opposite-colored"));
            }
            if d.adjacent(u, v) {
                return Err(stale("endpoints already adjacent"));
            }
            if corner_face(u, slot_u)? != face || corner_face(v, slot_v)? != face {
                return Err(stale("corners are not on the stated face"));
            }
            let new_e = EdgeId(spec.edges.len() as u32);
            spec.edges.push((u, v));
            spec.rot_v[u.0 as usize].insert(slot_u + 1, RotEntry::Toward(new_e, 1));
            spec.rot_v[v.0 as usize].insert(slot_v + 1, RotEntry::Toward(new_e, 0));
        }
        EdgeAddition::CrossingThrough { edge, dart, u, v, slot_u, slot_v } => {
            if !d.is_clean(edge) || d.dart_edge(dart) != edge {
                return Err(stale("crossed edge is not clean or dart mismatched"));
            }
            let p = match d.origin(dart) {
                Node::Vertex(p) => p,
                Node::Crossing(_) => return Err(stale("dart does not start at a vertex")),
            };
            let q = match d.target(dart) {
                Node::Vertex(q) => q,
                Node::Crossing(_) => return Err(stale("dart does not end at a vertex")),
            };
            if [u, v].iter().any(|w| *w == p || *w == q) {
                return Err(stale("new edge may not touch the crossed edge"));
            }
            if u == v || d.color(u) == d.color(v) || d.adjacent(u, v) {
                return Err(stale("endpoints must be distinct, opposite, non-adjacent"));
            }
            for w in [u, v, p, q] {
                if d.vertex_crossing(w).is_some() {
                    return Err(stale("an involved vertex already touches a crossing"));
                }
            }
            if corner_face(u, slot_u)? != faces.face_of(dart)
                || corner_face(v, slot_v)? != faces.face_of(d.twin(dart))
            {
                return Err(stale("corners are not on the faces flanking the crossed edge"));
            }
            let v_rot = d.rotation(Node::Vertex(v));
            let v_leave = v_rot[(slot_v + 1) % v_rot.len()];
            if !crossing_route_ok(d, &faces, dart, u, slot_u, Some(v_leave)) {
                return Err(stale("routing is not drawable across a bridge"));
            }
            let new_e = EdgeId(spec.edges.len() as u32);
            spec.edges.push((u, v));
            spec.crossings.push((edge, new_e));
            // ends of the crossed edge now point into the crossing
            for w in [p, q] {
                let rot = &mut spec.rot_v[w.0 as usize];
                let pos = rot.iter().position(|t| t.edge() == edge).unwrap();
                rot[pos] = RotEntry::IntoCrossing(edge);
            }
            spec.rot_v[u.0 as usize].insert(slot_u + 1, RotEntry::IntoCrossing(new_e));
            spec.rot_v[v.0 as usize].insert(slot_v + 1, RotEntry::IntoCrossing(new_e));
            // Rotation at the new crossing, in face-successor order: the
            // walk arriving from u turns toward q (the target of `dart`),
            // the walk arriving from q turns toward v, and so on.
            let idx = |w: VertexId| if d.edge_ends(edge)[0] == w { 0 } else { 1 };
            spec.rot_x.push([
                RotEntry::Toward(new_e, 0),
                RotEntry::Toward(edge, idx(q)),
                RotEntry::Toward(new_e, 1),
                RotEntry::Toward(edge, idx(p)),
            ]);
        }
    }
    Drawing::build(&spec).map_err(|e| ApplyError(format!("surgery produced a bad map: {e}")))
}

/// Repeatedly apply the policy-selected addition until the drawing is
/// maximal. Terminates: the edge count strictly increases and is bounded.
pub fn saturate(d: &Drawing, policy: ChoicePolicy) -> Drawing {
    let mut cur = d.clone();
    loop {
        let mut certs = addable_edges(&cur);
        if certs.is_empty() {
            return cur;
        }
        let pick = match policy {
            ChoicePolicy::Lexicographic => {
                certs.sort();
                certs[0]
            }
        };
        cur = apply_addition(&cur, &pick).expect("fresh certificate must apply");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::DrawingSpec;
    use crate::generators::{gen_h, gen_k2m, gen_pdw};

    fn cycle(n: usize) -> Drawing {
        let mut spec = DrawingSpec::default();
        for i in 0..n {
            spec.colors.push(if i % 2 == 0 { Color::Black } else { Color::White });
        }
        for i in 0..n as u32 {
            spec.edges.push((VertexId(i), VertexId((i + 1) % n as u32)));
        }
        for i in 0..n as u32 {
            spec.rot_v.push(vec![
                RotEntry::Toward(EdgeId(i), 1),
                RotEntry::Toward(EdgeId((i + n as u32 - 1) % n as u32), 0),
            ]);
        }
        Drawing::build(&spec).unwrap()
    }

    #[test]
    fn square_is_maximal() {
        let d = cycle(4);
        assert!(addable_edges(&d).is_empty(), "only same-color diagonals are missing");
        assert!(is_maximal(&d));
    }

    #[test]
    fn octagon_is_not_maximal() {
        let d = cycle(8);
        let certs = addable_edges(&d);
        assert!(!certs.is_empty());
        assert!(!is_maximal(&d));
        // every certificate applies and yields a valid drawing
        for cert in &certs {
            let next = apply_addition(&d, cert).unwrap();
            assert!(next.validate().ok, "{cert:?}: {:?}", next.validate().violations);
            assert_eq!(next.e(), 9);
        }
    }

    #[test]
    fn saturate_octagon() {
        let d = cycle(8);
        let m = saturate(&d, ChoicePolicy::Lexicographic);
        assert!(is_maximal(&m));
        assert!(m.validate().ok);
        assert!(m.e() >= 10, "two-connected lower bound at n = 8 is 10, got {}", m.e());
        assert_eq!(m.n(), 8);
        // idempotence
        let again = saturate(&m, ChoicePolicy::Lexicographic);
        assert_eq!(again.to_icpd(), m.to_icpd());
    }

    #[test]
    fn saturate_square_fixed_point() {
        let d = cycle(4);
        let m = saturate(&d, ChoicePolicy::Lexicographic);
        assert_eq!(m.to_icpd(), d.to_icpd());
    }

    #[test]
    fn k22_has_no_additions() {
        let d = gen_k2m(2).unwrap();
        assert!(addable_edges(&d).is_empty());
    }

    #[test]
    fn h_family_is_maximal() {
        for k in 1..=5 {
            assert!(is_maximal(&gen_h(k).unwrap()), "H_{k}");
        }
    }

    #[test]
    fn wheel_saturates_with_a_crossing() {
        let d = gen_pdw(10).unwrap();
        assert!(!is_maximal(&d));
        let m = saturate(&d, ChoicePolicy::Lexicographic);
        assert!(is_maximal(&m));
        assert!(m.c() >= 1, "the hub pair is only addable by crossing");
        assert_eq!(m.n(), 10);
    }

    #[test]
    fn stale_certificate_rejected() {
        let d = cycle(8);
        let certs = addable_edges(&d);
        let next = apply_addition(&d, &certs[0]).unwrap();
        // replaying arbitrary old certificates against the new drawing
        // either fails cleanly or still yields a valid drawing
        let mut stale_seen = false;
        for cert in &certs {
            match apply_addition(&next, cert) {
                Ok(nd) => assert!(nd.validate().ok),
                Err(_) => stale_seen = true,
            }
        }
        assert!(stale_seen, "the consumed certificate must be stale");
    }
}
