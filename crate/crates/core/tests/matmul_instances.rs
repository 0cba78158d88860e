//! The committed fixed-shape `matmul_<id>` functions (emitted by the
//! `matmul` generation macro, both loop-nest backends) are verified
//! against a naive triple-loop oracle and against the runtime
//! `pdegen::layout::matmul` primitive.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

mod instances {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/fixtures/matmul/matmul_instances.rs"
    ));
}

/// C = A * B with padded column-major leading dimensions; the reference
/// everything else is measured against.
fn oracle(
    m: usize,
    k: usize,
    nc: usize,
    a: &[f64],
    ld_a: usize,
    b: &[f64],
    ld_b: usize,
    c: &mut [f64],
    ld_c: usize,
    accumulate: bool,
) {
    if !accumulate {
        c[..ld_c * nc].fill(0.0);
    }
    for n in 0..nc {
        for i in 0..m {
            for p in 0..k {
                c[n * ld_c + i] += a[p * ld_a + i] * b[n * ld_b + p];
            }
        }
    }
}

struct Shape {
    m: usize,
    k: usize,
    n: usize,
    ld_a: usize,
    ld_b: usize,
    ld_c: usize,
    accumulate: bool,
    f: fn(&[f64], &[f64], &mut [f64]),
}

fn shapes() -> Vec<Shape> {
    vec![
        Shape { m: 3, k: 3, n: 3, ld_a: 3, ld_b: 3, ld_c: 3, accumulate: false, f: instances::matmul_g_3x3x3 },
        Shape { m: 3, k: 3, n: 3, ld_a: 3, ld_b: 3, ld_c: 3, accumulate: false, f: instances::matmul_w_3x3x3 },
        Shape { m: 5, k: 4, n: 6, ld_a: 8, ld_b: 4, ld_c: 8, accumulate: false, f: instances::matmul_g_pad_5x4x6 },
        Shape { m: 5, k: 4, n: 6, ld_a: 8, ld_b: 4, ld_c: 8, accumulate: false, f: instances::matmul_w_pad_5x4x6 },
        Shape { m: 4, k: 5, n: 4, ld_a: 4, ld_b: 8, ld_c: 4, accumulate: true, f: instances::matmul_g_acc_4x5x4 },
        Shape { m: 4, k: 5, n: 4, ld_a: 4, ld_b: 8, ld_c: 4, accumulate: true, f: instances::matmul_w_acc_4x5x4 },
        Shape { m: 1, k: 7, n: 2, ld_a: 1, ld_b: 7, ld_c: 2, accumulate: false, f: instances::matmul_g_1x7x2 },
        Shape { m: 6, k: 2, n: 5, ld_a: 6, ld_b: 2, ld_c: 6, accumulate: false, f: instances::matmul_w_6x2x5 },
    ]
}

fn fill(rng: &mut StdRng, len: usize) -> Vec<f64> {
    (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

#[test]
fn instances_match_naive_oracle() {
    let mut rng = StdRng::seed_from_u64(0x5eed_1234);
    for s in shapes() {
        for _ in 0..50 {
            let a = fill(&mut rng, s.ld_a * s.k);
            let b = fill(&mut rng, s.ld_b * s.n);
            let c0 = fill(&mut rng, s.ld_c * s.n);
            let mut c = c0.clone();
            let mut want = c0.clone();
            (s.f)(&a, &b, &mut c);
            oracle(s.m, s.k, s.n, &a, s.ld_a, &b, s.ld_b, &mut want, s.ld_c, s.accumulate);
            let diff = c
                .iter()
                .zip(&want)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max);
            assert!(diff <= 1e-13, "max diff {diff}");
        }
    }
}

/// For `accumulate = false` the generic backend is the same loop nest
/// as the runtime primitive, so the results are identical bit for bit.
#[test]
fn generic_backend_bit_equals_runtime_primitive() {
    let mut rng = StdRng::seed_from_u64(0x5eed_5678);
    for s in shapes() {
        if s.accumulate {
            continue;
        }
        for _ in 0..20 {
            let a = fill(&mut rng, s.ld_a * s.k);
            let b = fill(&mut rng, s.ld_b * s.n);
            let mut c = vec![0.0; s.ld_c * s.n];
            let mut want = vec![0.0; s.ld_c * s.n];
            (s.f)(&a, &b, &mut c);
            pdegen::layout::matmul(s.m, s.k, s.n, &a, s.ld_a, &b, s.ld_b, &mut want, s.ld_c, false);
            // The wide backend reorders the k-loop against the i-loop but
            // keeps each accumulation in ascending k order, so it stays
            // bit-equal as well.
            assert_eq!(c, want);
        }
    }
}
