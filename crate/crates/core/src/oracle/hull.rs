//! Exact convex hulls of rational point sets of affine dimension at most 3.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::Q;

/// Face lattice data of `conv(points)`. Indices refer to the input slice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HullFaceLattice {
    pub dimension: usize,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    /// Vertex sets of the codimension-one faces.
    pub facets: Vec<Vec<usize>>,
    /// Number of faces of each dimension `0..=d`, the polytope included.
    pub f_vector: Vec<usize>,
}

type P3 = [i128; 3];

/// Affine dimension of a point set, and the coordinates spanning it.
pub fn affine_dimension(points: &[Vec<Q>]) -> (usize, Vec<usize>) {
    let Some(p0) = points.first() else {
        return (0, Vec::new());
    };
    let mut diffs: Vec<Vec<Q>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(p0).map(|(a, b)| a - b).collect())
        .collect();
    if diffs.is_empty() {
        return (0, Vec::new());
    }
    let pivots = linalg::rref(&mut diffs);
    (pivots.len(), pivots)
}

pub fn hull_face_lattice(points: &[Vec<Q>]) -> Result<HullFaceLattice> {
    if points.is_empty() {
        return Err(Error::input("convex hull of an empty point set"));
    }
    // Deduplicate, remembering the first input index of each point.
    let mut first: BTreeMap<&Vec<Q>, usize> = BTreeMap::new();
    for (i, p) in points.iter().enumerate() {
        first.entry(p).or_insert(i);
    }
    let mut uniq: Vec<(usize, &Vec<Q>)> = first.into_iter().map(|(p, i)| (i, p)).collect();
    uniq.sort();
    let pts: Vec<Vec<Q>> = uniq.iter().map(|(_, p)| (*p).clone()).collect();
    let back: Vec<usize> = uniq.iter().map(|(i, _)| *i).collect();

    let (d, pivots) = affine_dimension(&pts);
    if d > 3 {
        return Err(Error::Unsupported(format!(
            "hull oracle handles affine dimension ≤ 3, got {d}"
        )));
    }
    // Projection onto the pivot coordinates is injective on the affine hull.
    let ints = integer_coords(&pts, &pivots);
    let local = match d {
        0 => HullFaceLattice {
            dimension: 0,
            vertices: vec![0],
            edges: vec![],
            facets: vec![],
            f_vector: vec![1],
        },
        1 => hull_1d(&ints),
        2 => hull_2d(&ints),
        _ => hull_3d(&ints)?,
    };
    let map = |i: usize| back[i];
    Ok(HullFaceLattice {
        dimension: local.dimension,
        vertices: local.vertices.into_iter().map(map).collect(),
        edges: local.edges.into_iter().map(|(a, b)| (map(a), map(b))).collect(),
        facets: local
            .facets
            .into_iter()
            .map(|f| f.into_iter().map(map).collect())
            .collect(),
        f_vector: local.f_vector,
    })
}

fn integer_coords(pts: &[Vec<Q>], pivots: &[usize]) -> Vec<P3> {
    let mut l: i64 = 1;
    for p in pts {
        for &c in pivots {
            l = l.lcm(p[c].denom());
        }
    }
    pts.iter()
        .map(|p| {
            let mut v = [0i128; 3];
            for (k, &c) in pivots.iter().enumerate() {
                let x = p[c] * Q::from_integer(l);
                v[k] = *x.numer() as i128;
            }
            v
        })
        .collect()
}

fn hull_1d(p: &[P3]) -> HullFaceLattice {
    let lo = (0..p.len()).min_by_key(|&i| p[i][0]).unwrap();
    let hi = (0..p.len()).max_by_key(|&i| p[i][0]).unwrap();
    let (a, b) = (lo.min(hi), lo.max(hi));
    HullFaceLattice {
        dimension: 1,
        vertices: vec![a, b],
        edges: vec![(a, b)],
        facets: vec![vec![a], vec![b]],
        f_vector: vec![2, 1],
    }
}

fn cross2(o: [i128; 2], a: [i128; 2], b: [i128; 2]) -> i128 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Strict monotone chain: hull vertices in counter-clockwise order,
/// collinear boundary points dropped.
fn chain(idx: &[usize], coords: &[[i128; 2]]) -> Vec<usize> {
    let mut ids: Vec<usize> = idx.to_vec();
    ids.sort_by_key(|&i| coords[i]);
    ids.dedup_by_key(|i| coords[*i]);
    if ids.len() <= 2 {
        return ids;
    }
    let mut lower: Vec<usize> = Vec::new();
    for &i in &ids {
        while lower.len() >= 2
            && cross2(coords[lower[lower.len() - 2]], coords[lower[lower.len() - 1]], coords[i]) <= 0
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in ids.iter().rev() {
        while upper.len() >= 2
            && cross2(coords[upper[upper.len() - 2]], coords[upper[upper.len() - 1]], coords[i]) <= 0
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn polygon_edges(cycle: &[usize]) -> Vec<(usize, usize)> {
    let k = cycle.len();
    let mut e: Vec<(usize, usize)> = (0..k)
        .map(|t| {
            let (a, b) = (cycle[t], cycle[(t + 1) % k]);
            (a.min(b), a.max(b))
        })
        .collect();
    e.sort();
    e.dedup();
    e
}

fn hull_2d(p: &[P3]) -> HullFaceLattice {
    let coords: Vec<[i128; 2]> = p.iter().map(|v| [v[0], v[1]]).collect();
    let all: Vec<usize> = (0..p.len()).collect();
    let cycle = chain(&all, &coords);
    let edges = polygon_edges(&cycle);
    let mut vertices = cycle.clone();
    vertices.sort();
    HullFaceLattice {
        dimension: 2,
        f_vector: vec![vertices.len(), edges.len(), 1],
        facets: edges.iter().map(|&(a, b)| vec![a, b]).collect(),
        vertices,
        edges,
    }
}

fn sub(a: P3, b: P3) -> P3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: P3, b: P3) -> P3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: P3, b: P3) -> i128 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Sign of `det[b−a, c−a, d−a]`.
fn orient(p: &[P3], t: [usize; 3], d: usize) -> i128 {
    let n = cross(sub(p[t[1]], p[t[0]]), sub(p[t[2]], p[t[0]]));
    dot(n, sub(p[d], p[t[0]])).signum()
}

/// Primitive outward normal and offset of a triangle's plane.
fn plane(p: &[P3], t: [usize; 3]) -> (P3, i128) {
    let n = cross(sub(p[t[1]], p[t[0]]), sub(p[t[2]], p[t[0]]));
    let g = n.iter().fold(0i128, |g, &x| g.gcd(&x));
    let n = [n[0] / g, n[1] / g, n[2] / g];
    (n, dot(n, p[t[0]]))
}

fn hull_3d(p: &[P3]) -> Result<HullFaceLattice> {
    let n = p.len();
    // Initial tetrahedron.
    let a = 0;
    let b = (1..n).find(|&i| p[i] != p[a]).ok_or_else(|| Error::invariant("degenerate hull"))?;
    let c = (0..n)
        .find(|&i| cross(sub(p[b], p[a]), sub(p[i], p[a])) != [0, 0, 0])
        .ok_or_else(|| Error::invariant("degenerate hull"))?;
    let d = (0..n)
        .find(|&i| orient(p, [a, b, c], i) != 0)
        .ok_or_else(|| Error::invariant("degenerate hull"))?;
    let mut tris: Vec<[usize; 3]> = if orient(p, [a, b, c], d) < 0 {
        vec![[a, b, c], [a, d, b], [b, d, c], [c, d, a]]
    } else {
        vec![[a, c, b], [a, b, d], [b, c, d], [c, a, d]]
    };
    for q in 0..n {
        if [a, b, c, d].contains(&q) {
            continue;
        }
        let visible: Vec<bool> = tris.iter().map(|&t| orient(p, t, q) > 0).collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let mut vis_edges = BTreeSet::new();
        for (t, _) in tris.iter().zip(&visible).filter(|(_, &v)| v) {
            for k in 0..3 {
                vis_edges.insert((t[k], t[(k + 1) % 3]));
            }
        }
        let horizon: Vec<(usize, usize)> = vis_edges
            .iter()
            .filter(|&&(u, v)| !vis_edges.contains(&(v, u)))
            .copied()
            .collect();
        let mut next: Vec<[usize; 3]> = tris
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| !v)
            .map(|(t, _)| *t)
            .collect();
        next.extend(horizon.into_iter().map(|(u, v)| [u, v, q]));
        tris = next;
    }

    // Group triangles by plane; each plane is a facet.
    let mut planes: BTreeMap<(P3, i128), ()> = BTreeMap::new();
    for &t in &tris {
        planes.insert(plane(p, t), ());
    }
    let mut facets = Vec::new();
    let mut edges = BTreeSet::new();
    let mut vertices = BTreeSet::new();
    for (nrm, off) in planes.into_keys() {
        // Supporting-plane test over every input point.
        if (0..n).any(|i| dot(nrm, p[i]) > off) {
            return Err(Error::invariant("hull facet plane is not supporting"));
        }
        let on: Vec<usize> = (0..n).filter(|&i| dot(nrm, p[i]) == off).collect();
        // Drop the coordinate where the normal is largest to get a faithful 2D chart.
        let drop = (0..3).max_by_key(|&k| nrm[k].abs()).unwrap();
        let keep: Vec<usize> = (0..3).filter(|&k| k != drop).collect();
        let coords: Vec<[i128; 2]> = p.iter().map(|v| [v[keep[0]], v[keep[1]]]).collect();
        let cycle = chain(&on, &coords);
        if cycle.len() < 3 {
            return Err(Error::invariant("hull facet is not two-dimensional"));
        }
        edges.extend(polygon_edges(&cycle));
        vertices.extend(cycle.iter().copied());
        let mut f = cycle;
        f.sort();
        facets.push(f);
    }
    facets.sort();
    let (v, e, f) = (vertices.len(), edges.len(), facets.len());
    if v + f != e + 2 {
        return Err(Error::invariant(format!("hull fails Euler's relation: {v} - {e} + {f} ≠ 2")));
    }
    Ok(HullFaceLattice {
        dimension: 3,
        vertices: vertices.into_iter().collect(),
        edges: edges.into_iter().collect(),
        facets,
        f_vector: vec![v, e, f, 1],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn pts(raw: &[&[i64]]) -> Vec<Vec<Q>> {
        raw.iter().map(|p| p.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn planar_cases() {
        let hexagon = pts(&[&[1, 1], &[-1, 2], &[2, -1], &[-1, -1], &[1, -2], &[-2, 1], &[0, 0]]);
        assert_eq!(hull_face_lattice(&hexagon).unwrap().f_vector, vec![6, 6, 1]);
        let tri = pts(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(hull_face_lattice(&tri).unwrap().f_vector, vec![3, 3, 1]);
        let seg = pts(&[&[0, 0], &[2, 2], &[1, 1]]);
        let s = hull_face_lattice(&seg).unwrap();
        assert_eq!(s.f_vector, vec![2, 1]);
        assert_eq!(s.vertices, vec![0, 1]);
        assert_eq!(hull_face_lattice(&pts(&[&[3, 3]])).unwrap().f_vector, vec![1]);
    }

    #[test]
    fn cube_with_interior_and_face_points() {
        let mut raw: Vec<Vec<i64>> = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    raw.push(vec![x, y, z]);
                }
            }
        }
        let p: Vec<Vec<Q>> = raw.iter().map(|v| v.iter().map(|&x| q(x)).collect()).collect();
        let h = hull_face_lattice(&p).unwrap();
        assert_eq!(h.f_vector, vec![8, 12, 6, 1]);
    }

    #[test]
    fn embedded_square_in_4d() {
        let p = pts(&[&[0, 0, 1, 1], &[1, 0, 1, 1], &[0, 1, 1, 1], &[1, 1, 1, 1]]);
        let h = hull_face_lattice(&p).unwrap();
        assert_eq!(h.dimension, 2);
        assert_eq!(h.f_vector, vec![4, 4, 1]);
        let simplex4 = pts(&[&[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert!(matches!(hull_face_lattice(&simplex4), Err(Error::Unsupported(_))));
    }

    #[test]
    fn octahedron() {
        let p = pts(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1], &[0, 0, 0]]);
        assert_eq!(hull_face_lattice(&p).unwrap().f_vector, vec![6, 12, 8, 1]);
    }
}
