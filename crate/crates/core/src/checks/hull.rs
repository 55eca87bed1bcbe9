//! Convex hulls of finite lattice point sets.

use crate::error::{Error, Result};

pub type Point = (i64, i64);

/// Convex hull, vertices counterclockwise starting from the lexicographically
/// smallest point; collinear points are dropped. One vertex for a single point,
/// two for a segment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hull {
    vertices: Vec<Point>,
}

fn cross(o: Point, a: Point, b: Point) -> i128 {
    let (ax, ay) = ((a.0 - o.0) as i128, (a.1 - o.1) as i128);
    let (bx, by) = ((b.0 - o.0) as i128, (b.1 - o.1) as i128);
    ax * by - ay * bx
}

/// Andrew's monotone chain.
pub fn convex_hull(points: &[Point]) -> Result<Hull> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.is_empty() {
        return Err(Error::EmptySet);
    }
    if pts.len() < 3 {
        return Ok(Hull { vertices: pts });
    }
    let mut lower: Vec<Point> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    // all points collinear: the chains collapse to the two endpoints
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    Ok(Hull { vertices: lower })
}

impl Hull {
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Whether `p` lies inside or on the boundary.
    pub fn contains(&self, p: Point) -> bool {
        let v = &self.vertices;
        match v.len() {
            1 => p == v[0],
            2 => {
                cross(v[0], v[1], p) == 0
                    && p.0 >= v[0].0.min(v[1].0)
                    && p.0 <= v[0].0.max(v[1].0)
                    && p.1 >= v[0].1.min(v[1].1)
                    && p.1 <= v[0].1.max(v[1].1)
            }
            n => (0..n).all(|k| cross(v[k], v[(k + 1) % n], p) >= 0),
        }
    }

    /// Bounding box `((xmin, ymin), (xmax, ymax))`.
    pub fn bounds(&self) -> (Point, Point) {
        let xs = self.vertices.iter().map(|p| p.0);
        let ys = self.vertices.iter().map(|p| p.1);
        (
            (xs.clone().min().unwrap(), ys.clone().min().unwrap()),
            (xs.max().unwrap(), ys.max().unwrap()),
        )
    }

    /// All lattice points inside or on the hull, row-major.
    pub fn lattice_points(&self) -> Vec<Point> {
        let ((x0, y0), (x1, y1)) = self.bounds();
        let mut out = Vec::new();
        for x in x0..=x1 {
            for y in y0..=y1 {
                if self.contains((x, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_drops_interior_point() {
        let h = convex_hull(&[(0, 0), (2, 0), (0, 2), (1, 1)]).unwrap();
        assert_eq!(h.vertices(), &[(0, 0), (2, 0), (0, 2)]);
    }

    #[test]
    fn degenerate_hulls() {
        assert_eq!(convex_hull(&[(0, 0)]).unwrap().vertices(), &[(0, 0)]);
        let seg = convex_hull(&[(0, 0), (1, 1), (2, 2)]).unwrap();
        assert_eq!(seg.vertices(), &[(0, 0), (2, 2)]);
        assert!(seg.contains((1, 1)));
        assert!(!seg.contains((1, 0)));
        assert_eq!(seg.lattice_points(), vec![(0, 0), (1, 1), (2, 2)]);
        assert_eq!(convex_hull(&[]).unwrap_err(), Error::EmptySet);
    }

    #[test]
    fn square_with_collinear_edge_points() {
        let pts: Vec<Point> = (0..3).flat_map(|x| (0..3).map(move |y| (x, y))).collect();
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.vertices(), &[(0, 0), (2, 0), (2, 2), (0, 2)]);
        assert_eq!(h.lattice_points().len(), 9);
    }

    #[test]
    fn trefoil_support_misses_corner() {
        let pts = [
            (0, 0),
            (0, 1),
            (0, 2),
            (1, 0),
            (1, 1),
            (1, 2),
            (2, 0),
            (2, 1),
        ];
        let h = convex_hull(&pts).unwrap();
        assert!(!h.contains((2, 2)));
        assert_eq!(h.lattice_points().len(), 8);
    }
}
