//! Built-in triangulations.
//!
//! * `S_1_1`: two triangles `(0, 1, 2)` glued along all three edges.
//! * `S_0_4`: the boundary of a tetrahedron, marked points at its vertices.
//! * `S_0_5`: the boundary of a triangular bipyramid (equator 0, 1, 2;
//!   poles 3, 4).
//! * `S_2_1`: the octagon `a b A B c d C D` fanned from one corner.
//!
//! Polyhedral presets label the edge `{p, q}` by its position in the sorted
//! list of vertex pairs.

use super::triangulation::Triangulation;
use crate::error::{Error, Result};

pub const PRESETS: [&str; 4] = ["S_1_1", "S_0_4", "S_0_5", "S_2_1"];

/// Triangulation of a sphere from counter-clockwise faces given by vertices.
pub fn from_faces(faces: &[[usize; 3]]) -> Result<Triangulation> {
    let mut pairs: Vec<(usize, usize)> =
        faces.iter().flat_map(|f| (0..3).map(move |i| (f[i].min(f[(i + 1) % 3]), f[i].max(f[(i + 1) % 3])))).collect();
    pairs.sort();
    pairs.dedup();
    let label = |p: usize, q: usize| pairs.binary_search(&(p.min(q), p.max(q))).unwrap();
    let triangles = faces.iter().map(|f| [label(f[0], f[1]), label(f[1], f[2]), label(f[2], f[0])]).collect();
    Triangulation::new(triangles)
}

fn octagon() -> Result<Triangulation> {
    // sides s0..s7 carry a b a b c d c d (the inverse sides are implied by the
    // orientable gluing); diagonals from corner 0 to corners 2..6 are 4..8
    let side = [0, 1, 0, 1, 2, 3, 2, 3];
    let diag = |k: usize| -> usize {
        match k {
            1 => side[0],
            7 => side[7],
            _ => 2 + k,
        }
    };
    let triangles = (1..7).map(|k| [diag(k), side[k], diag(k + 1)]).collect();
    Triangulation::new(triangles)
}

pub fn builtin_surface(name: &str) -> Result<Triangulation> {
    match name {
        "S_1_1" => Triangulation::new(vec![[0, 1, 2], [0, 1, 2]]),
        "S_0_4" => from_faces(&[[0, 2, 1], [0, 1, 3], [0, 3, 2], [1, 2, 3]]),
        "S_0_5" => from_faces(&[[0, 1, 3], [1, 2, 3], [2, 0, 3], [1, 0, 4], [2, 1, 4], [0, 2, 4]]),
        "S_2_1" => octagon(),
        _ => Err(Error::UnknownSurface { name: name.to_string(), available: PRESETS.join(", ") }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_topology() {
        let expect = [("S_1_1", 1, 1, 3), ("S_0_4", 0, 4, 6), ("S_0_5", 0, 5, 9), ("S_2_1", 2, 1, 9)];
        for (name, g, n, zeta) in expect {
            let t = builtin_surface(name).unwrap();
            assert_eq!((t.genus(), t.num_marked(), t.zeta()), (g, n, zeta), "{name}");
            assert_eq!(t.triangles().len() * 3, 2 * zeta);
            assert_eq!(t.euler_characteristic(), 2 - 2 * g as i64);
        }
    }

    #[test]
    fn unknown_preset() {
        let err = builtin_surface("S_9_9").unwrap_err();
        assert!(err.to_string().contains("S_0_5"));
    }
}
