// Fixed-shape matrix-multiply functions emitted by the `matmul`
// generation macro. Do not edit; regenerate from the macro library.

/// C (3x3) = A (3x3) * B (3x3), column-major, ld = (3, 3, 3).
#[inline]
pub fn matmul_g_3x3x3(a: &[f64], b: &[f64], c: &mut [f64]) {
    c[..9].fill(0.0);
    for n in 0..3 {
        for i in 0..3 {
            let mut acc = 0.0;
            for p in 0..3 {
                acc += a[p * 3 + i] * b[n * 3 + p];
            }
            c[n * 3 + i] += acc;
        }
    }
}

/// C (3x3) = A (3x3) * B (3x3), column-major, ld = (3, 3, 3).
#[inline]
pub fn matmul_w_3x3x3(a: &[f64], b: &[f64], c: &mut [f64]) {
    c[..9].fill(0.0);
    for n in 0..3 {
        for p in 0..3 {
            let bv = b[n * 3 + p];
            for i in 0..3 {
                c[n * 3 + i] += a[p * 3 + i] * bv;
            }
        }
    }
}

/// C (5x6) = A (5x4) * B (4x6), column-major, ld = (8, 4, 8).
#[inline]
pub fn matmul_g_pad_5x4x6(a: &[f64], b: &[f64], c: &mut [f64]) {
    c[..48].fill(0.0);
    for n in 0..6 {
        for i in 0..5 {
            let mut acc = 0.0;
            for p in 0..4 {
                acc += a[p * 8 + i] * b[n * 4 + p];
            }
            c[n * 8 + i] += acc;
        }
    }
}

/// C (5x6) = A (5x4) * B (4x6), column-major, ld = (8, 4, 8).
#[inline]
pub fn matmul_w_pad_5x4x6(a: &[f64], b: &[f64], c: &mut [f64]) {
    c[..48].fill(0.0);
    for n in 0..6 {
        for p in 0..4 {
            let bv = b[n * 4 + p];
            for i in 0..5 {
                c[n * 8 + i] += a[p * 8 + i] * bv;
            }
        }
    }
}

/// C (4x4) += A (4x5) * B (5x4), column-major, ld = (4, 8, 4).
#[inline]
pub fn matmul_g_acc_4x5x4(a: &[f64], b: &[f64], c: &mut [f64]) {
    for n in 0..4 {
        for i in 0..4 {
            let mut acc = 0.0;
            for p in 0..5 {
                acc += a[p * 4 + i] * b[n * 8 + p];
            }
            c[n * 4 + i] += acc;
        }
    }
}

/// C (4x4) += A (4x5) * B (5x4), column-major, ld = (4, 8, 4).
#[inline]
pub fn matmul_w_acc_4x5x4(a: &[f64], b: &[f64], c: &mut [f64]) {
    for n in 0..4 {
        for p in 0..5 {
            let bv = b[n * 8 + p];
            for i in 0..4 {
                c[n * 4 + i] += a[p * 4 + i] * bv;
            }
        }
    }
}

/// C (1x2) = A (1x7) * B (7x2), column-major, ld = (1, 7, 2).
#[inline]
pub fn matmul_g_1x7x2(a: &[f64], b: &[f64], c: &mut [f64]) {
    c[..4].fill(0.0);
    for n in 0..2 {
        for i in 0..1 {
            let mut acc = 0.0;
            for p in 0..7 {
                acc += a[p * 1 + i] * b[n * 7 + p];
            }
            c[n * 2 + i] += acc;
        }
    }
}

/// C (6x5) = A (6x2) * B (2x5), column-major, ld = (6, 2, 6).
#[inline]
pub fn matmul_w_6x2x5(a: &[f64], b: &[f64], c: &mut [f64]) {
    c[..30].fill(0.0);
    for n in 0..5 {
        for p in 0..2 {
            let bv = b[n * 2 + p];
            for i in 0..6 {
                c[n * 6 + i] += a[p * 6 + i] * bv;
            }
        }
    }
}
