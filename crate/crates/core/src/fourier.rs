//! Logarithmic Fourier series of the limit function.
//!
//! c_n = (1/log(m+1)) integral over [1, m+1] of lambda(x) x^{-1}
//! e^{-2 pi i n log_{m+1} x} dx. The quadrature splits [1, m+1] at
//! depth-k base-(m+1) rationals (the discontinuity set of lambda), holds
//! lambda at the cell midpoint, and integrates the oscillating kernel
//! exactly per cell, so the error does not grow with |n|.

use crate::error::Result;
use crate::hp::Complex;
use crate::system::CantorSystem;
use rayon::prelude::*;
use rug::Float;

/// One coefficient with its quadrature error estimate.
#[derive(Debug, Clone)]
pub struct FourierCoefficient {
    pub index: i64,
    pub value: Complex,
    pub quad_error: Float,
}

/// Coefficients c_{-order}..c_{order} at a fixed quadrature depth.
#[derive(Debug, Clone)]
pub struct FourierTable {
    pub order: usize,
    pub coeffs: Vec<FourierCoefficient>,
    pub cells: u64,
    depth: u32,
}

impl FourierTable {
    pub fn coefficient(&self, n: i64) -> &FourierCoefficient {
        let idx = (n + self.order as i64) as usize;
        &self.coeffs[idx]
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }
}

/// Smallest depth whose cell count m (m+1)^k reaches `resolution`.
fn depth_for_resolution(sys: &CantorSystem, resolution: u64) -> u32 {
    let base = sys.src_base();
    let m = sys.m() as u64;
    let mut k = 0u32;
    let mut cells = m as u128;
    while cells < resolution as u128 {
        cells *= base as u128;
        k += 1;
    }
    k
}

/// Midpoint values of lambda and endpoint u-coordinates for all cells at
/// the given depth.
struct CellGrid {
    /// u_j = log_{m+1}(x_j) for j in 0..=cells
    u: Vec<f64>,
    lam_mid: Vec<f64>,
}

fn build_cells(sys: &CantorSystem, depth: u32) -> CellGrid {
    let base = sys.src_base();
    let m = sys.m() as u64;
    let alpha = sys.alpha_f64();
    let radix = sys.radix() as f64;
    let ln_base = (base as f64).ln();
    let pk = base.pow(depth);
    let cells = m * pk;
    let inv_pk = 1.0 / pk as f64;

    let mut u = Vec::with_capacity(cells as usize + 1);
    for j in 0..=cells {
        let x = (pk + j) as f64 * inv_pk;
        u.push(x.ln() / ln_base);
    }

    let mut lam_mid = Vec::with_capacity(cells as usize);
    for j in 0..cells {
        let idx = pk + j; // k+1 digits, leading digit = integer part
        let mut digits = [0u32; 40];
        let mut t = idx;
        let mut len = 0;
        while t > 0 {
            digits[len] = (t % base) as u32;
            len += 1;
            t /= base;
        }
        // digits[len-1] is the integer part; the rest are fractional
        let int_digit = digits[len - 1];
        let mut d = 0f64;
        for r in 1..len {
            let eps = digits[len - 1 - r];
            d += sys.f(eps) as f64 / radix.powi(r as i32);
        }
        // append the expansion of 1/2 at depth len..
        if base.is_multiple_of(2) {
            d += sys.f((base / 2) as u32) as f64 / radix.powi(len as i32);
        } else {
            let h = (m / 2) as u32; // m even when base is odd
            d += sys.f(h) as f64 / radix.powi((len - 1) as i32) / (radix - 1.0);
        }
        let x_mid = (idx as f64 + 0.5) * inv_pk;
        let c_int = sys.f(int_digit) as f64;
        lam_mid.push((c_int + d) / x_mid.powf(alpha));
    }
    CellGrid { u, lam_mid }
}

fn coefficient_from_grid(grid: &CellGrid, n: i64) -> (f64, f64) {
    let cells = grid.lam_mid.len();
    if n == 0 {
        let mut acc = 0f64;
        for j in 0..cells {
            acc += grid.lam_mid[j] * (grid.u[j + 1] - grid.u[j]);
        }
        (acc, 0.0)
    } else {
        let w = -2.0 * std::f64::consts::PI * n as f64;
        let mut re = 0f64;
        let mut im = 0f64;
        let (mut s0, mut c0) = (w * grid.u[0]).sin_cos();
        for j in 0..cells {
            let (s1, c1) = (w * grid.u[j + 1]).sin_cos();
            // (e^{i w u1} - e^{i w u0}) / (i w)
            let dre = c1 - c0;
            let dim = s1 - s0;
            // divide by i w: (dre + i dim)/(i w) = (dim - i dre)/w
            re += grid.lam_mid[j] * dim / w;
            im += grid.lam_mid[j] * (-dre) / w;
            s0 = s1;
            c0 = c1;
        }
        (re, im)
    }
}

/// All coefficients up to `order`, with a two-level Richardson error
/// estimate. `resolution` is the requested number of quadrature cells
/// (at least 2).
pub fn fourier_table(
    sys: &CantorSystem,
    order: usize,
    resolution: u64,
    prec: u32,
) -> Result<FourierTable> {
    assert!(resolution >= 2, "resolution must be at least 2");
    let depth = depth_for_resolution(sys, resolution);
    let fine = build_cells(sys, depth);
    let coarse = build_cells(sys, depth.saturating_sub(1));
    type RawCoeff = (i64, (f64, f64), (f64, f64));
    let ns: Vec<i64> = (-(order as i64)..=order as i64).collect();
    let raw: Vec<RawCoeff> = ns
        .par_iter()
        .map(|&n| {
            (
                n,
                coefficient_from_grid(&fine, n),
                coefficient_from_grid(&coarse, n),
            )
        })
        .collect();
    let cells = fine.lam_mid.len() as u64;
    let float_floor = cells as f64 * 1e-17;
    let coeffs = raw
        .into_iter()
        .map(|(n, (re, im), (re_c, im_c))| {
            let richardson = ((re - re_c).hypot(im - im_c)).max(float_floor);
            FourierCoefficient {
                index: n,
                value: Complex::from_f64(prec, re, im),
                quad_error: Float::with_val(prec, richardson),
            }
        })
        .collect();
    Ok(FourierTable {
        order,
        coeffs,
        cells,
        depth,
    })
}

/// Single coefficient (order-0 table slice).
pub fn fourier_coefficient(
    sys: &CantorSystem,
    n: i64,
    resolution: u64,
    prec: u32,
) -> Result<FourierCoefficient> {
    assert!(resolution >= 2, "resolution must be at least 2");
    let depth = depth_for_resolution(sys, resolution);
    let fine = build_cells(sys, depth);
    let coarse = build_cells(sys, depth.saturating_sub(1));
    let (re, im) = coefficient_from_grid(&fine, n);
    let (re_c, im_c) = coefficient_from_grid(&coarse, n);
    let richardson = ((re - re_c).hypot(im - im_c)).max(fine.lam_mid.len() as f64 * 1e-17);
    Ok(FourierCoefficient {
        index: n,
        value: Complex::from_f64(prec, re, im),
        quad_error: Float::with_val(prec, richardson),
    })
}

/// Fejér (Cesàro) partial sum of order `order` at x > 0: the weights are
/// 1 - |n|/(order+1) and u = log_{m+1} x is reduced mod 1 first.
pub fn cesaro_sum(sys: &CantorSystem, x: &Float, table: &FourierTable, order: usize) -> Float {
    assert!(order <= table.order, "table holds coefficients to order {}", table.order);
    let xf = x.to_f64();
    assert!(xf > 0.0, "cesaro sum requires x > 0");
    let u = (xf.ln() / (sys.src_base() as f64).ln()).rem_euclid(1.0);
    let c0 = table.coefficient(0);
    let mut acc = c0.value.re.to_f64();
    for n in 1..=order as i64 {
        let w = 1.0 - n as f64 / (order as f64 + 1.0);
        let c = table.coefficient(n);
        let theta = 2.0 * std::f64::consts::PI * n as f64 * u;
        let (s, cth) = theta.sin_cos();
        // 2 Re(c_n e^{i theta}) using conjugate symmetry of the pair
        acc += 2.0 * w * (c.value.re.to_f64() * cth - c.value.im.to_f64() * s);
    }
    Float::with_val(x.prec(), acc)
}
