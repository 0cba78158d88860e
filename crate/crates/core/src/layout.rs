//! Data-layout primitives shared by the generic kernels and the generated
//! code: padded AoS blocks, AoS<->SoA slice transposes and the small
//! column-major matmul used for operator application.

/// Round `q` up to a multiple of the vector width `w`.
pub fn pad(q: usize, w: usize) -> usize {
    w * q.div_ceil(w)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    Aos,
    Soa,
}

/// A contiguous block of `npoints` points with `nvar` quantities each.
///
/// AoS: index (point i, var v) -> i*q_pad + v, buffer length npoints*q_pad.
/// SoA: slices of `slice_width` points; within slice s the element
/// (i, v) with i in the slice sits at s*nvar*slice_width + v*slice_width
/// + (i mod slice_width). Tail lanes are zero-filled.
#[derive(Debug, Clone)]
pub struct QuantityBlock {
    pub data: Vec<f64>,
    pub npoints: usize,
    pub nvar: usize,
    pub layout: Layout,
    /// AoS point stride (q_pad) or SoA slice width.
    pub stride: usize,
}

impl QuantityBlock {
    pub fn new_aos(npoints: usize, nvar: usize, q_pad: usize) -> Self {
        assert!(q_pad >= nvar);
        QuantityBlock {
            data: vec![0.0; npoints * q_pad],
            npoints,
            nvar,
            layout: Layout::Aos,
            stride: q_pad,
        }
    }

    pub fn n_slices(npoints: usize, s: usize) -> usize {
        npoints.div_ceil(s)
    }
}

/// AoS -> SoA with slice width `s`. Element (i, v) moves from i*q_pad+v
/// to v*s + (i mod s) within slice floor(i/s); the tail slice is
/// zero-padded.
pub fn transpose_aos_to_soa(block: &QuantityBlock, s: usize) -> QuantityBlock {
    assert_eq!(block.layout, Layout::Aos, "input must be aos");
    assert!(s >= 1);
    let n_slices = QuantityBlock::n_slices(block.npoints, s);
    let mut out = vec![0.0; n_slices * block.nvar * s];
    for i in 0..block.npoints {
        let slice = i / s;
        let lane = i % s;
        for v in 0..block.nvar {
            out[slice * block.nvar * s + v * s + lane] = block.data[i * block.stride + v];
        }
    }
    QuantityBlock {
        data: out,
        npoints: block.npoints,
        nvar: block.nvar,
        layout: Layout::Soa,
        stride: s,
    }
}

/// Inverse of [`transpose_aos_to_soa`]; restores the AoS block with point
/// stride `q_pad` (pad lanes zero).
pub fn transpose_soa_to_aos(block: &QuantityBlock, q_pad: usize) -> QuantityBlock {
    assert_eq!(block.layout, Layout::Soa, "input must be soa");
    let s = block.stride;
    let mut out = vec![0.0; block.npoints * q_pad];
    for i in 0..block.npoints {
        let slice = i / s;
        let lane = i % s;
        for v in 0..block.nvar {
            out[i * q_pad + v] = block.data[slice * block.nvar * s + v * s + lane];
        }
    }
    QuantityBlock {
        data: out,
        npoints: block.npoints,
        nvar: block.nvar,
        layout: Layout::Aos,
        stride: q_pad,
    }
}

/// Column-major matmul: C (M x Nc) = A (M x K) · B (K x Nc), honoring the
/// padded leading dimensions. With `accumulate` false the full ldC x Nc
/// region owned by C is overwritten (padded rows zeroed). The inner k loop
/// runs in ascending order for every element, matching the loop nests the
/// macro backends emit, so generic and wide traversals produce bit-equal
/// sums.
#[allow(clippy::too_many_arguments)]
pub fn matmul(
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
    assert!(ld_a >= m && ld_b >= k && ld_c >= m, "leading dims too small");
    if !accumulate {
        c[..ld_c * nc].fill(0.0);
    }
    for n in 0..nc {
        for i in 0..m {
            let mut acc = 0.0;
            for p in 0..k {
                acc += a[p * ld_a + i] * b[n * ld_b + p];
            }
            c[n * ld_c + i] += acc;
        }
    }
}

macro_rules! aligned_stack {
    ($(#[$doc:meta])* $name:ident, $align:literal) => {
        $(#[$doc])*
        #[repr(align($align))]
        pub struct $name<const L: usize>(pub [f64; L]);

        impl<const L: usize> $name<L> {
            pub fn zeroed() -> Self {
                Self([0.0; L])
            }
        }
        impl<const L: usize> std::ops::Deref for $name<L> {
            type Target = [f64];
            fn deref(&self) -> &[f64] {
                &self.0
            }
        }
        impl<const L: usize> std::ops::DerefMut for $name<L> {
            fn deref_mut(&mut self) -> &mut [f64] {
                &mut self.0
            }
        }
    };
}

aligned_stack!(
    /// Stack storage for `L` reals at 8-byte alignment.
    Align8, 8
);
aligned_stack!(
    /// Stack storage for `L` reals at 16-byte alignment.
    Align16, 16
);
aligned_stack!(
    /// Stack storage for `L` reals at 32-byte alignment.
    Align32, 32
);
aligned_stack!(
    /// Stack storage for `L` reals at 64-byte alignment.
    Align64, 64
);

/// Heap buffer of reals with an explicit alignment; the paired aligned
/// free happens on drop. This is the heap branch of the array-allocation
/// macro (the stack branch uses the `Align*` wrappers above).
pub struct AlignedBuf {
    ptr: *mut f64,
    len: usize,
    layout: std::alloc::Layout,
}

/// Allocate `len` zeroed reals aligned to `align` bytes.
pub fn aligned_buf(len: usize, align: usize) -> AlignedBuf {
    assert!(len > 0 && align >= 8 && align.is_power_of_two());
    let layout = std::alloc::Layout::from_size_align(len * 8, align).unwrap();
    let ptr = unsafe { std::alloc::alloc_zeroed(layout) } as *mut f64;
    assert!(!ptr.is_null(), "aligned allocation failed");
    AlignedBuf { ptr, len, layout }
}

impl std::ops::Deref for AlignedBuf {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        unsafe { std::slice::from_raw_parts(self.ptr, self.len) }
    }
}
impl std::ops::DerefMut for AlignedBuf {
    fn deref_mut(&mut self) -> &mut [f64] {
        unsafe { std::slice::from_raw_parts_mut(self.ptr, self.len) }
    }
}
impl Drop for AlignedBuf {
    fn drop(&mut self) {
        unsafe { std::alloc::dealloc(self.ptr as *mut u8, self.layout) }
    }
}
unsafe impl Send for AlignedBuf {}
unsafe impl Sync for AlignedBuf {}
