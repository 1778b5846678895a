//! Shared test helpers, most importantly the brute-force maximality
//! oracle: try every conceivable one-edge insertion by raw token surgery
//! and let full validation decide. It shares no logic with
//! `maximality::addable_edges` — no face reasoning, no routing
//! constraints — so agreement between the two is a real check.

use mbicp::embedding::{Color, Drawing, EdgeId, RotEntry, VertexId};

/// Insert a token into a rotation list at every position in turn.
fn insertion_points(len: usize) -> Vec<usize> {
    if len == 0 {
        vec![0]
    } else {
        (0..len).collect()
    }
}

/// True iff some single edge (clean or crossing one existing edge, in any
/// rotation slot and either crossing order) extends `d` to a drawing that
/// passes `validate`.
pub fn oracle_has_addition(d: &Drawing) -> bool {
    let base = d.spec();
    let n = base.colors.len();

    let mut pairs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if base.colors[u] == Color::Black
                && base.colors[v] == Color::White
                && !d.adjacent(VertexId(u as u32), VertexId(v as u32))
            {
                pairs.push((u, v));
            }
        }
    }

    for &(u, v) in &pairs {
        let new_e = EdgeId(base.edges.len() as u32);
        // clean insertion at every slot pair
        for pu in insertion_points(base.rot_v[u].len()) {
            for pv in insertion_points(base.rot_v[v].len()) {
                let mut s = base.clone();
                s.edges.push((VertexId(u as u32), VertexId(v as u32)));
                let at = (pu + 1).min(s.rot_v[u].len());
                s.rot_v[u].insert(at, RotEntry::Toward(new_e, 1));
                let at = (pv + 1).min(s.rot_v[v].len());
                s.rot_v[v].insert(at, RotEntry::Toward(new_e, 0));
                if let Ok(cand) = Drawing::build(&s) {
                    if cand.validate().ok {
                        return true;
                    }
                }
            }
        }
        // crossing insertion through every edge, slot pair and chirality
        for e in 0..base.edges.len() {
            let (p, q) = base.edges[e];
            let eid = EdgeId(e as u32);
            if !d.is_clean(eid) {
                continue;
            }
            for pu in insertion_points(base.rot_v[u].len()) {
                for pv in insertion_points(base.rot_v[v].len()) {
                    for flip in [false, true] {
                        let mut s = base.clone();
                        s.edges.push((VertexId(u as u32), VertexId(v as u32)));
                        s.crossings.push((eid, new_e));
                        for w in [p, q] {
                            let rot = &mut s.rot_v[w.0 as usize];
                            let pos = rot.iter().position(|t| t.edge() == eid).unwrap();
                            rot[pos] = RotEntry::IntoCrossing(eid);
                        }
                        let at = (pu + 1).min(s.rot_v[u].len());
                        s.rot_v[u].insert(at, RotEntry::IntoCrossing(new_e));
                        let at = (pv + 1).min(s.rot_v[v].len());
                        s.rot_v[v].insert(at, RotEntry::IntoCrossing(new_e));
                        let (a, b) = if flip { (1, 0) } else { (0, 1) };
                        s.rot_x.push([
                            RotEntry::Toward(new_e, 0),
                            RotEntry::Toward(eid, a),
                            RotEntry::Toward(new_e, 1),
                            RotEntry::Toward(eid, b),
                        ]);
                        if let Ok(cand) = Drawing::build(&s) {
                            if cand.validate().ok {
                                return true;
                            }
                        }
                    }
                }
            }
        }
    }
    false
}

/// The oracle's verdict on maximality.
pub fn oracle_is_maximal(d: &Drawing) -> bool {
    !oracle_has_addition(d)
}
