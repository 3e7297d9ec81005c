fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Hull vertices in counterclockwise order (monotone chain), collinear points dropped.
pub fn convex_hull_2d(points: &[[f64; 2]]) -> Vec<[f64; 2]> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<[f64; 2]> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &[f64; 2]>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

/// Clip a convex polygon to {x : x.a <= b}.
fn clip(poly: &[[f64; 2]], a: [f64; 2], b: f64) -> Vec<[f64; 2]> {
    let side = |p: [f64; 2]| p[0] * a[0] + p[1] * a[1] - b;
    let mut out = Vec::with_capacity(poly.len() + 1);
    for i in 0..poly.len() {
        let p = poly[i];
        let q = poly[(i + 1) % poly.len()];
        let (sp, sq) = (side(p), side(q));
        if sp <= 0.0 {
            out.push(p);
        }
        if (sp < 0.0 && sq > 0.0) || (sp > 0.0 && sq < 0.0) {
            let t = sp / (sp - sq);
            out.push([p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])]);
        }
    }
    out
}

/// Voronoi cell of the origin among `points`, clipped to the square of half-width `bound`.
pub fn voronoi_cell_2d(points: &[[f64; 2]], bound: f64) -> Vec<[f64; 2]> {
    let mut cell = vec![[-bound, -bound], [bound, -bound], [bound, bound], [-bound, bound]];
    let mut sorted = points.to_vec();
    sorted.sort_by(|p, q| (p[0].hypot(p[1])).partial_cmp(&q[0].hypot(q[1])).expect("finite coordinates"));
    for p in sorted {
        let r2 = p[0] * p[0] + p[1] * p[1];
        if r2 == 0.0 {
            continue;
        }
        // bisector half-plane x.p <= |p|^2 / 2; skip points whose bisector misses the cell
        let reach = cell.iter().map(|v| v[0] * p[0] + v[1] * p[1]).fold(f64::MIN, f64::max);
        if reach <= r2 / 2.0 {
            continue;
        }
        cell = clip(&cell, p, r2 / 2.0);
    }
    dedup_vertices(cell, 1e-12 * bound.max(1.0))
}

fn dedup_vertices(poly: Vec<[f64; 2]>, eps: f64) -> Vec<[f64; 2]> {
    let mut out: Vec<[f64; 2]> = Vec::with_capacity(poly.len());
    for v in poly {
        if out.last().map_or(true, |w| (v[0] - w[0]).hypot(v[1] - w[1]) > eps) {
            out.push(v);
        }
    }
    while out.len() > 1 {
        let (f, l) = (out[0], out[out.len() - 1]);
        if (f[0] - l[0]).hypot(f[1] - l[1]) > eps {
            break;
        }
        out.pop();
    }
    out
}
