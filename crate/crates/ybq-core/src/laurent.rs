//! Laurent coefficient extraction around h = 0 from symmetric node samples.
//!
//! For a family with a simple pole at the origin, write
//!   R(h) = c_-1/h + c_0 + c_1 h + c_2 h^2 + ...
//! Sampling at +-h for h in {h0, h0/2, h0/4} separates parities:
//!   even part  E(h) = (R(h) + R(-h))/2      = c_0 + c_2 h^2 + c_4 h^4 + ...
//!   odd part   h (R(h) - R(-h))/2           = c_-1 + c_1 h^2 + c_3 h^4 + ...
//! so each parity reduces to a 3x3 Vandermonde system in h^2. One-sided node
//! choices leak the pole into c_0 at O(h0^2) and miss tight tolerances; the
//! symmetric scheme keeps c_0 near machine precision.

use num_complex::Complex64;

use crate::error::Result;
use crate::op::GradedOp;

pub struct LaurentFit {
    pub c_minus1: GradedOp,
    pub c0: GradedOp,
    pub c1: GradedOp,
    /// rem(h0) / rem(h0/2) where rem(h) = |R(h) - c_-1/h - c_0 - c_1 h|.
    /// The leftover term is c_2 h^2 when present, so the ratio sits near 4;
    /// families with no h^2 term show the next order (ratio 8).
    pub remainder_ratio: f64,
}

fn invert_3x3(a: [[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    let cof = |r1: usize, c1: usize, r2: usize, c2: usize| {
        a[r1][c1] * a[r2][c2] - a[r1][c2] * a[r2][c1]
    };
    [
        [
            cof(1, 1, 2, 2) / det,
            -cof(0, 1, 2, 2) / det,
            cof(0, 1, 1, 2) / det,
        ],
        [
            -cof(1, 0, 2, 2) / det,
            cof(0, 0, 2, 2) / det,
            -cof(0, 0, 1, 2) / det,
        ],
        [
            cof(1, 0, 2, 1) / det,
            -cof(0, 0, 2, 1) / det,
            cof(0, 0, 1, 1) / det,
        ],
    ]
}

fn combine(coeffs: [f64; 3], ops: &[GradedOp; 3]) -> Result<GradedOp> {
    let mut out = ops[0].clone().scaled(Complex64::new(coeffs[0], 0.0));
    out.add_scaled(&ops[1], Complex64::new(coeffs[1], 0.0))?;
    out.add_scaled(&ops[2], Complex64::new(coeffs[2], 0.0))?;
    Ok(out)
}

pub fn fit_symmetric<F>(eval: F, h0: f64) -> Result<LaurentFit>
where
    F: Fn(Complex64) -> Result<GradedOp>,
{
    let nodes = [h0, h0 / 2.0, h0 / 4.0];
    let mut evens: Vec<GradedOp> = Vec::with_capacity(3);
    let mut odds: Vec<GradedOp> = Vec::with_capacity(3);
    let mut plus_h0: Option<GradedOp> = None;
    let mut plus_h1: Option<GradedOp> = None;
    for (k, &h) in nodes.iter().enumerate() {
        let rp = eval(Complex64::new(h, 0.0))?;
        let rm = eval(Complex64::new(-h, 0.0))?;
        let mut even = rp.clone();
        even.add_scaled(&rm, Complex64::new(1.0, 0.0))?;
        even.scale(Complex64::new(0.5, 0.0));
        let mut odd = rp.clone();
        odd.add_scaled(&rm, Complex64::new(-1.0, 0.0))?;
        odd.scale(Complex64::new(0.5 * h, 0.0));
        evens.push(even);
        odds.push(odd);
        if k == 0 {
            plus_h0 = Some(rp);
        } else if k == 1 {
            plus_h1 = Some(rp);
        }
    }
    let evens: [GradedOp; 3] = evens.try_into().expect("three nodes");
    let odds: [GradedOp; 3] = odds.try_into().expect("three nodes");

    let vand = invert_3x3([
        [1.0, nodes[0] * nodes[0], nodes[0].powi(4)],
        [1.0, nodes[1] * nodes[1], nodes[1].powi(4)],
        [1.0, nodes[2] * nodes[2], nodes[2].powi(4)],
    ]);
    let c0 = combine(vand[0], &evens)?;
    let c_minus1 = combine(vand[0], &odds)?;
    let c1 = combine(vand[1], &odds)?;

    let remainder = |r: &GradedOp, h: f64| -> Result<f64> {
        let hh = Complex64::new(h, 0.0);
        let mut rem = r.clone();
        rem.add_scaled(&c_minus1, -1.0 / hh)?;
        rem.add_scaled(&c0, Complex64::new(-1.0, 0.0))?;
        rem.add_scaled(&c1, -hh)?;
        Ok(rem.max_abs())
    };
    let r0 = remainder(&plus_h0.expect("first node kept"), nodes[0])?;
    let r1 = remainder(&plus_h1.expect("second node kept"), nodes[1])?;
    let remainder_ratio = if r1 > 0.0 { r0 / r1 } else { f64::INFINITY };

    Ok(LaurentFit {
        c_minus1,
        c0,
        c1,
        remainder_ratio,
    })
}
