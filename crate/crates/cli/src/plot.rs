use std::fmt::Write;

use tropevol_core::cells::enumerate_triangulation;
use tropevol_core::ehrhart::lattice_point_in;
use tropevol_core::{Error, TropMatrix};

use crate::CliError;

const UNIT: f64 = 80.0;
const MARGIN: f64 = 40.0;

/// SVG picture of the cells of `tconv(M)` in the plane, with the finite points
/// of `Γ_b^2` in the bounding box; points inside the polygon are filled.
pub fn render(m: &TropMatrix, b: u32, guard: u64) -> Result<String, CliError> {
    if m.rows() != 2 {
        return Err(Error::Invalid(format!("plot needs d = 2, got d = {}", m.rows())).into());
    }
    let t = enumerate_triangulation(m)?;
    if t.is_empty() {
        return Err(Error::Invalid("the polytope has no cells to draw".into()).into());
    }
    let verts: Vec<&Vec<i64>> = t.cells().iter().flat_map(|c| c.vertices()).collect();
    let lo = [0, 1].map(|i| verts.iter().map(|v| v[i]).min().unwrap().min(0));
    let hi = [0, 1].map(|i| verts.iter().map(|v| v[i]).max().unwrap());
    let width = (hi[0] - lo[0]) as f64 * UNIT + 2.0 * MARGIN;
    let height = (hi[1] - lo[1]) as f64 * UNIT + 2.0 * MARGIN;
    let sx = |x: f64| MARGIN + (x - lo[0] as f64) * UNIT;
    let sy = |y: f64| height - MARGIN - (y - lo[1] as f64) * UNIT;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(
        svg,
        r##"<rect width="100%" height="100%" fill="#ffffff"/>"##
    );
    let mut cells: Vec<_> = t.cells().iter().collect();
    cells.sort_by_key(|c| std::cmp::Reverse(c.dim()));
    for c in cells {
        let pts: Vec<String> = c
            .vertices()
            .iter()
            .map(|v| format!("{:.2},{:.2}", sx(v[0] as f64), sy(v[1] as f64)))
            .collect();
        match c.dim() {
            2 => {
                let _ = writeln!(
                    svg,
                    r##"<polygon points="{}" fill="#cfe3f5" stroke="#2f6690" stroke-width="1"/>"##,
                    pts.join(" ")
                );
            }
            1 => {
                let _ = writeln!(
                    svg,
                    r##"<polyline points="{}" fill="none" stroke="#2f6690" stroke-width="3"/>"##,
                    pts.join(" ")
                );
            }
            _ => {
                let v = c.vertices()[0].clone();
                let _ = writeln!(
                    svg,
                    r##"<circle cx="{:.2}" cy="{:.2}" r="5" fill="#2f6690"/>"##,
                    sx(v[0] as f64),
                    sy(v[1] as f64)
                );
            }
        }
    }

    let top = [0, 1].map(|i| u128::from(b).checked_pow(hi[i].max(0) as u32));
    let (Some(tx), Some(ty)) = (top[0], top[1]) else {
        return Err(Error::Guard {
            needed: u128::MAX,
            guard,
        }
        .into());
    };
    if tx.saturating_mul(ty) > u128::from(guard) {
        return Err(Error::Guard {
            needed: tx.saturating_mul(ty),
            guard,
        }
        .into());
    }
    let log = |z: u128| (z as f64).ln() / f64::from(b).ln();
    let (mut shown, mut inside) = (0usize, 0usize);
    for zx in 1..=tx {
        for zy in 1..=ty {
            let hit = lattice_point_in(m, b, &[zx, zy])?;
            shown += 1;
            inside += usize::from(hit);
            let (fill, r) = if hit { ("#d1495b", 3.0) } else { ("none", 2.0) };
            let _ = writeln!(
                svg,
                r##"<circle cx="{:.2}" cy="{:.2}" r="{r}" fill="{fill}" stroke="#d1495b" stroke-width="0.8"/>"##,
                sx(log(zx)),
                sy(log(zy))
            );
        }
    }
    let _ = writeln!(
        svg,
        r##"<text x="{MARGIN}" y="{:.0}" font-family="sans-serif" font-size="12" fill="#333333">b = {b}: {inside} of {shown} finite lattice points lie in the polygon</text>"##,
        MARGIN * 0.6
    );
    svg.push_str("</svg>");
    Ok(svg)
}
