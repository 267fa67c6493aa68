//! Vertex normal surfaces by the double description method.
//!
//! The cone is `{x >= 0 : matching equations}`. Starting from the unit
//! vectors of the non-negative orthant, each equation in turn cuts the cone
//! and new extreme rays arise from adjacent pairs on opposite sides of it.
//! Rays that break the quad constraint are dropped as soon as they appear:
//! the admissible region is a union of faces of every intermediate cone, so
//! its extreme rays only ever combine admissible pairs.

use alloc::vec::Vec;

use super::{quad_type, NormalCoords, NormalError};
use crate::tri::{face_vertices, Triangulation};

pub const DEFAULT_ENUMERATION_LIMIT: usize = 15;
/// Supports are 128-bit masks, seven bits per tetrahedron.
pub const MAX_ENUMERATION_LIMIT: usize = 18;

#[derive(Clone, Debug)]
struct Ray {
    coords: Vec<i128>,
    support: u128,
}

impl Ray {
    fn new(coords: Vec<i128>) -> Self {
        let support = coords
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .fold(0u128, |m, (i, _)| m | (1 << i));
        Self { coords, support }
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn normalise(v: &mut [i128]) {
    let g = v.iter().fold(0, |g, &x| gcd(g, x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

/// Bits of the three quad coordinates of every tetrahedron.
fn quad_masks(tets: usize) -> Vec<u128> {
    (0..tets).map(|t| 0b111u128 << (7 * t + 4)).collect()
}

fn admissible(support: u128, masks: &[u128]) -> bool {
    masks.iter().all(|&m| (support & m).count_ones() <= 1)
}

/// One row per internal face and arc type.
fn matching_rows(tri: &Triangulation) -> Vec<Vec<i128>> {
    let n = tri.tet_count();
    let mut rows = Vec::new();
    for g in tri.gluing_pairs() {
        for v in face_vertices(g.src_face) {
            let mut row = alloc::vec![0i128; 7 * n];
            let w = g.perm.apply(v);
            row[7 * g.src_tet + v] += 1;
            row[7 * g.src_tet + 4 + quad_type(v, g.src_face)] += 1;
            row[7 * g.dst_tet + w] -= 1;
            row[7 * g.dst_tet + 4 + quad_type(w, g.dst_face)] -= 1;
            if row.iter().any(|&x| x != 0) {
                rows.push(row);
            }
        }
    }
    rows
}

/// All admissible vertex normal surfaces, as primitive integer vectors in
/// increasing lexicographic order.
pub fn enumerate_vertex_surfaces(tri: &Triangulation, limit: usize) -> Result<Vec<NormalCoords>, NormalError> {
    tri.check()?;
    let n = tri.tet_count();
    let limit = limit.min(MAX_ENUMERATION_LIMIT);
    if n > limit {
        return Err(NormalError::LimitExceeded { tets: n, limit });
    }
    let dim = 7 * n;
    let masks = quad_masks(n);
    let mut rays: Vec<Ray> = (0..dim)
        .map(|i| {
            let mut v = alloc::vec![0; dim];
            v[i] = 1;
            Ray::new(v)
        })
        .collect();

    for row in matching_rows(tri) {
        let value = |r: &Ray| -> i128 { r.coords.iter().zip(&row).map(|(a, b)| a * b).sum() };
        let values: Vec<i128> = rays.iter().map(value).collect();
        if values.iter().all(|&v| v == 0) {
            continue;
        }
        let mut next = Vec::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for (i, &v) in values.iter().enumerate() {
            match v.signum() {
                0 => next.push(rays[i].clone()),
                1 => pos.push(i),
                _ => neg.push(i),
            }
        }
        for &i in &pos {
            for &j in &neg {
                let union = rays[i].support | rays[j].support;
                if !admissible(union, &masks) {
                    continue;
                }
                // Adjacent iff no other ray lives on the face spanned by both.
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(k, r)| k != i && k != j && r.support & !union == 0);
                if blocked {
                    continue;
                }
                let (a, b) = (values[i], -values[j]);
                let mut v: Vec<i128> = rays[i]
                    .coords
                    .iter()
                    .zip(&rays[j].coords)
                    .map(|(&x, &y)| b * x + a * y)
                    .collect();
                normalise(&mut v);
                next.push(Ray::new(v));
            }
        }
        rays = next;
    }

    let mut out: Vec<NormalCoords> = rays
        .into_iter()
        .filter(|r| admissible(r.support, &masks))
        .map(|r| NormalCoords::from_vec(r.coords.into_iter().map(|x| x as u64).collect()))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}
