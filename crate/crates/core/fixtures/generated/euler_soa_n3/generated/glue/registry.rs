// Generated glue for solver `euler_soa_n3`: binds the generated
// kernels into a `pdegen::runtime::KernelSet` the driver can run in
// place of the generic kernels. Do not edit; regenerate from the
// specification.

#[path = "../kernels/predictor.rs"]
pub mod predictor;
#[path = "../kernels/riemann.rs"]
pub mod riemann;
#[path = "../kernels/update.rs"]
pub mod update;

pub static KERNELS: pdegen::runtime::KernelSet = pdegen::runtime::KernelSet {
    project_name: "euler_soa_n3",
    predictor: predictor::predictor,
    riemann: riemann::riemann,
    update: update::update,
};
