//! Generated kernel trees from the fixture corpus, compiled into the
//! crate so the driver can run them in place of the generic kernels and
//! so every committed tree is compile-checked by the build. Each
//! submodule is the glue registry of one tree under `fixtures/generated/`.

use crate::runtime::KernelSet;

macro_rules! fixture_tree {
    ($name:ident) => {
        pub mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/fixtures/generated/",
                stringify!($name),
                "/generated/glue/registry.rs"
            ));
        }
    };
}

fixture_tree!(advection_n2);
fixture_tree!(advection_n3);
fixture_tree!(advection_otf_n5);
fixture_tree!(euler_vortex_n3);
fixture_tree!(euler_soa_n3);
fixture_tree!(euler_sod_limiting_n3);
fixture_tree!(ns_n3);

static ALL: &[&KernelSet] = &[
    &advection_n2::KERNELS,
    &advection_n3::KERNELS,
    &advection_otf_n5::KERNELS,
    &euler_vortex_n3::KERNELS,
    &euler_soa_n3::KERNELS,
    &euler_sod_limiting_n3::KERNELS,
    &ns_n3::KERNELS,
];

/// Look up the compiled kernel set generated for `project_name`.
pub fn lookup(project_name: &str) -> Option<&'static KernelSet> {
    ALL.iter().find(|k| k.project_name == project_name).copied()
}
