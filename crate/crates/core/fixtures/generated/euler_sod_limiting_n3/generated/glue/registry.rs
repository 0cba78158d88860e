// Generated glue for solver `euler_sod_limiting_n3`: binds the generated
// kernels into a `pdegen::runtime::KernelSet` the driver can run in
// place of the generic kernels. Do not edit; regenerate from the
// specification.

#[path = "../kernels/predictor.rs"]
pub mod predictor;
#[path = "../kernels/riemann.rs"]
pub mod riemann;
#[path = "../kernels/update.rs"]
pub mod update;
#[path = "../kernels/dmp.rs"]
pub mod dmp;
#[path = "../kernels/projection.rs"]
pub mod projection;
#[path = "../kernels/fv_step.rs"]
pub mod fv_step;

pub static KERNELS: pdegen::runtime::KernelSet = pdegen::runtime::KernelSet {
    project_name: "euler_sod_limiting_n3",
    predictor: predictor::predictor,
    riemann: riemann::riemann,
    update: update::update,
};
