//! Controller/Model layer of the code generator: turn a validated
//! specification into per-Model render contexts, choose the kernel
//! template variants, render all views and assemble the generated tree
//! plus build manifest and user-solver stub.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::basis::precompute_basis;
use crate::layout::pad;
use crate::limiter::compute_projection_matrices;
use crate::spec::{validate_spec, PredictorVariant, SolverKind, Specification, Term};
use crate::template::{render_str, MapLoader, RenderContext, TemplateLoader};

#[cfg(test)]
mod tests;

/// Which flux call sites the kernels emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FluxCall {
    Aos,
    Soa,
}

/// The deterministic per-spec plan: which template variant implements
/// each kernel role, which optional kernels exist, and the padded sizes
/// shared by every context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelPlan {
    /// Predictor template id: picard, ck or otf.
    pub predictor: PredictorVariant,
    /// Riemann solver template id.
    pub riemann: &'static str,
    /// Limiter kernels (dmp, projection, fv step) are generated.
    pub limiter: bool,
    /// Flux call mode at every flux call site.
    pub flux_call: FluxCall,
    /// A standalone gradient kernel is generated (gradient-dependent flux).
    pub gradient_kernel: bool,
    pub n_dof: usize,
    pub n_var: usize,
    pub n_var_pad: usize,
    pub n_dof_pad: usize,
    pub alignment_bytes: usize,
}

/// One generated file-to-symbol binding in the glue registry.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct KernelBindingEntry {
    pub role: String,
    pub symbol: String,
    pub file: String,
}

/// The build manifest: ordered file list plus the kernel binding table.
/// It replaces a generated build script; the project build compiles the
/// listed sources against the runtime crate.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Manifest {
    pub project_name: String,
    pub entry: String,
    pub files: Vec<String>,
    pub bindings: Vec<KernelBindingEntry>,
}

pub const MANIFEST_PATH: &str = "generated/manifest.json";

/// The rendered output tree: relative path -> file text. The manifest is
/// serialized into the tree as well and is always written last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedTree {
    pub files: BTreeMap<String, String>,
    pub manifest: Manifest,
}

#[derive(Debug, thiserror::Error)]
pub enum GenerateError {
    #[error("specification is invalid: {0}")]
    InvalidSpec(String),
    #[error("template '{path}': {source}")]
    Template {
        path: String,
        source: crate::template::RenderError,
    },
    #[error("template '{0}' not found")]
    MissingTemplate(String),
}

/// Deterministically choose the kernel variants for a valid spec.
pub fn select_kernel_variants(s: &Specification) -> KernelPlan {
    let w = s.optimization.vector_width as usize;
    KernelPlan {
        predictor: s.predictor_variant,
        riemann: "rusanov",
        limiter: s.solver_kind != SolverKind::Aderdg,
        flux_call: if s.optimization.use_flux_vect && w > 1 {
            FluxCall::Soa
        } else {
            FluxCall::Aos
        },
        gradient_kernel: s.uses(Term::ViscousFlux),
        n_dof: s.n_dof() as usize,
        n_var: s.quantities as usize,
        n_var_pad: pad(s.quantities as usize, w),
        n_dof_pad: pad(s.n_dof() as usize, w),
        alignment_bytes: s.alignment_bytes() as usize,
    }
}

/// Format a slice of reals as a Rust array literal that round-trips every
/// bit exactly.
fn real_array_literal(xs: &[f64]) -> String {
    format!("{:?}", xs)
}

fn camel_case(name: &str) -> String {
    name.split('_')
        .filter(|s| !s.is_empty())
        .map(|s| {
            let mut c = s.chars();
            match c.next() {
                Some(f) => f.to_uppercase().collect::<String>() + c.as_str(),
                None => String::new(),
            }
        })
        .collect()
}

fn set_shared(ctx: &mut RenderContext, s: &Specification, plan: &KernelPlan) {
    ctx.set("solverName", s.project_name.clone());
    ctx.set("nDof", plan.n_dof);
    ctx.set("nVar", plan.n_var);
    ctx.set("nVarPad", plan.n_var_pad);
    ctx.set("nDim", s.dimension as usize);
    ctx.set("alignment", plan.alignment_bytes);
    ctx.set("tempVarsOnStack", s.optimization.temp_vars_on_stack);
    ctx.set("useFluxVect", plan.flux_call == FluxCall::Soa);
    ctx.set("useViscousFlux", s.uses(Term::ViscousFlux));
}

/// Build the per-Model render contexts. Shared numeric keys are set
/// identically in every context; each Model additionally receives only
/// the keys its views consume.
pub fn build_contexts(s: &Specification) -> BTreeMap<String, RenderContext> {
    let plan = select_kernel_variants(s);
    let mut out = BTreeMap::new();

    let mut kernels = RenderContext::new();
    set_shared(&mut kernels, s, &plan);
    kernels.set("order", s.order);
    kernels.set("nDofPad", plan.n_dof_pad);
    kernels.set("nFace", plan.n_dof.pow(s.dimension as u32 - 1));
    kernels.set("vectorWidth", s.optimization.vector_width);
    kernels.set("useFlux", s.uses(Term::Flux));
    kernels.set("useNcp", s.uses(Term::Ncp));
    kernels.set("useSource", s.uses(Term::Source));
    kernels.set("fluxLike", s.uses(Term::Flux) || s.uses(Term::ViscousFlux));
    kernels.set("needsGradient", s.uses(Term::Ncp) || s.uses(Term::ViscousFlux));
    let tables = precompute_basis(s.order as usize);
    kernels.set("weightsLit", real_array_literal(&tables.weights));
    kernels.set("diffLit", real_array_literal(&tables.diff));
    kernels.set("phiLeftLit", real_array_literal(&tables.phi_left));
    kernels.set("phiRightLit", real_array_literal(&tables.phi_right));
    kernels.set("timeIntLit", real_array_literal(&tables.time_int));
    if plan.limiter {
        kernels.set("nSub", 2 * s.order + 1);
        let (d0, eps) = s
            .limiter
            .as_ref()
            .map(|l| (l.dmp_delta0, l.dmp_epsilon))
            .unwrap_or((1e-4, 1e-3));
        kernels.set("dmpDelta0", format!("{:?}", d0));
        kernels.set("dmpEpsilon", format!("{:?}", eps));
        let pair = compute_projection_matrices(s.order as usize, s.dimension as usize);
        kernels.set("pLit", real_array_literal(&pair.p));
        kernels.set("rLit", real_array_literal(&pair.r));
    }
    out.insert("kernels".to_string(), kernels);

    let mut glue = RenderContext::new();
    set_shared(&mut glue, s, &plan);
    glue.set("hasLimiter", plan.limiter);
    out.insert("glue".to_string(), glue);

    let mut stub = RenderContext::new();
    set_shared(&mut stub, s, &plan);
    stub.set("solverStruct", camel_case(&s.project_name) + "Solver");
    stub.set("useFlux", s.uses(Term::Flux));
    stub.set("useNcp", s.uses(Term::Ncp));
    stub.set("useSource", s.uses(Term::Source));
    out.insert("stub".to_string(), stub);

    out
}

/// The template corpus compiled into the binary; a filesystem root can be
/// used instead for template development.
pub fn embedded_loader() -> MapLoader {
    let mut m = std::collections::HashMap::new();
    macro_rules! tpl {
        ($path:literal) => {
            m.insert(
                $path.to_string(),
                include_str!(concat!("../../../../templates/", $path)).to_string(),
            );
        };
    }
    tpl!("macros/opt_macros.tpl");
    tpl!("kernels/common.tpl");
    tpl!("kernels/predictor_picard.tpl");
    tpl!("kernels/predictor_ck.tpl");
    tpl!("kernels/predictor_otf.tpl");
    tpl!("kernels/riemann_rusanov.tpl");
    tpl!("kernels/update.tpl");
    tpl!("kernels/gradient.tpl");
    tpl!("kernels/dmp.tpl");
    tpl!("kernels/projection.tpl");
    tpl!("kernels/fv_step.tpl");
    tpl!("glue/registry.tpl");
    tpl!("glue/user_solver_stub.tpl");
    MapLoader(m)
}

fn render_view(
    loader: &dyn TemplateLoader,
    tpl_path: &str,
    ctx: &RenderContext,
) -> Result<String, GenerateError> {
    let src = loader
        .load(tpl_path)
        .ok_or_else(|| GenerateError::MissingTemplate(tpl_path.to_string()))?;
    let mut ctx = ctx.clone();
    render_str(&src, &mut ctx, loader).map_err(|e| GenerateError::Template {
        path: tpl_path.to_string(),
        source: e,
    })
}

/// Render the user-solver stub from its Model context.
pub fn generate_user_solver_stub(
    ctx: &RenderContext,
    loader: &dyn TemplateLoader,
) -> Result<String, GenerateError> {
    render_view(loader, "glue/user_solver_stub.tpl", ctx)
}

/// Render every view for the spec and assemble the output tree: one file
/// per kernel, the glue registry, the user-solver stub and the build
/// manifest (serialized last into `generated/manifest.json`).
pub fn generate_all(
    s: &Specification,
    loader: &dyn TemplateLoader,
) -> Result<GeneratedTree, GenerateError> {
    let report = validate_spec(s);
    if !report.valid() {
        let msg = report
            .errors
            .iter()
            .map(|e| format!("{}: {}", e.path, e.message))
            .collect::<Vec<_>>()
            .join("; ");
        return Err(GenerateError::InvalidSpec(msg));
    }
    let plan = select_kernel_variants(s);
    let contexts = build_contexts(s);
    let kctx = &contexts["kernels"];
    let gctx = &contexts["glue"];

    let mut files = BTreeMap::new();
    let mut bindings = Vec::new();
    let mut order: Vec<String> = Vec::new();
    let emit = |files: &mut BTreeMap<String, String>,
                    order: &mut Vec<String>,
                    path: &str,
                    text: String| {
        files.insert(path.to_string(), text);
        order.push(path.to_string());
    };

    let predictor_tpl = match plan.predictor {
        PredictorVariant::Picard => "kernels/predictor_picard.tpl",
        PredictorVariant::Ck => "kernels/predictor_ck.tpl",
        PredictorVariant::Otf => "kernels/predictor_otf.tpl",
    };
    emit(
        &mut files,
        &mut order,
        "generated/kernels/predictor.rs",
        render_view(loader, predictor_tpl, kctx)?,
    );
    bindings.push(KernelBindingEntry {
        role: "predictor".into(),
        symbol: "predictor::predictor".into(),
        file: "generated/kernels/predictor.rs".into(),
    });
    emit(
        &mut files,
        &mut order,
        "generated/kernels/riemann.rs",
        render_view(loader, "kernels/riemann_rusanov.tpl", kctx)?,
    );
    bindings.push(KernelBindingEntry {
        role: "riemann".into(),
        symbol: "riemann::riemann".into(),
        file: "generated/kernels/riemann.rs".into(),
    });
    emit(
        &mut files,
        &mut order,
        "generated/kernels/update.rs",
        render_view(loader, "kernels/update.tpl", kctx)?,
    );
    bindings.push(KernelBindingEntry {
        role: "update".into(),
        symbol: "update::update".into(),
        file: "generated/kernels/update.rs".into(),
    });
    if plan.gradient_kernel {
        emit(
            &mut files,
            &mut order,
            "generated/kernels/gradient.rs",
            render_view(loader, "kernels/gradient.tpl", kctx)?,
        );
        bindings.push(KernelBindingEntry {
            role: "gradient".into(),
            symbol: "gradient::gradients".into(),
            file: "generated/kernels/gradient.rs".into(),
        });
    }
    if plan.limiter {
        emit(
            &mut files,
            &mut order,
            "generated/kernels/dmp.rs",
            render_view(loader, "kernels/dmp.tpl", kctx)?,
        );
        bindings.push(KernelBindingEntry {
            role: "dmp".into(),
            symbol: "dmp::detect".into(),
            file: "generated/kernels/dmp.rs".into(),
        });
        emit(
            &mut files,
            &mut order,
            "generated/kernels/projection.rs",
            render_view(loader, "kernels/projection.tpl", kctx)?,
        );
        bindings.push(KernelBindingEntry {
            role: "projection".into(),
            symbol: "projection::apply_p / projection::apply_r".into(),
            file: "generated/kernels/projection.rs".into(),
        });
        emit(
            &mut files,
            &mut order,
            "generated/kernels/fv_step.rs",
            render_view(loader, "kernels/fv_step.tpl", kctx)?,
        );
        bindings.push(KernelBindingEntry {
            role: "fv_step".into(),
            symbol: "fv_step::fv_step".into(),
            file: "generated/kernels/fv_step.rs".into(),
        });
    }
    emit(
        &mut files,
        &mut order,
        "generated/glue/registry.rs",
        render_view(loader, "glue/registry.tpl", gctx)?,
    );
    emit(
        &mut files,
        &mut order,
        "generated/UserSolver.rs",
        generate_user_solver_stub(&contexts["stub"], loader)?,
    );

    let manifest = Manifest {
        project_name: s.project_name.clone(),
        entry: "generated/glue/registry.rs".into(),
        files: order,
        bindings,
    };
    let manifest_json =
        serde_json::to_string_pretty(&manifest).expect("manifest serialization cannot fail");
    files.insert(MANIFEST_PATH.to_string(), manifest_json + "\n");
    Ok(GeneratedTree { files, manifest })
}

/// Write the tree under `out_dir`; the manifest is written last so its
/// presence marks a complete tree.
pub fn write_tree(tree: &GeneratedTree, out_dir: &std::path::Path) -> std::io::Result<()> {
    for (path, text) in &tree.files {
        if path == MANIFEST_PATH {
            continue;
        }
        let full = out_dir.join(path);
        std::fs::create_dir_all(full.parent().unwrap())?;
        std::fs::write(full, text)?;
    }
    let full = out_dir.join(MANIFEST_PATH);
    std::fs::create_dir_all(full.parent().unwrap())?;
    std::fs::write(full, &tree.files[MANIFEST_PATH])?;
    Ok(())
}

/// One fixed-shape instantiation of the `matmul` generation macro.
pub struct MatmulShape {
    pub id: &'static str,
    pub m: i64,
    pub k: i64,
    pub n: i64,
    pub ld_a: i64,
    pub ld_b: i64,
    pub ld_c: i64,
    pub accumulate: bool,
    /// Selects the backend: 1 emits the scalar-accumulator loop nest,
    /// >1 the unit-stride broadcast loop nest.
    pub vector_width: i64,
}

/// Render a committed source file of fixed-shape `matmul_<id>` functions
/// from the macro library, one per shape.
pub fn generate_matmul_instances(shapes: &[MatmulShape]) -> Result<String, GenerateError> {
    let loader = embedded_loader();
    let src = "{% include \"macros/opt_macros.tpl\" %}{{ matmul(id, M, K, Nc, ldA, ldB, ldC, accumulate) }}";
    let mut out = String::from(
        "// Fixed-shape matrix-multiply functions emitted by the `matmul`\n\
         // generation macro. Do not edit; regenerate from the macro library.\n",
    );
    for s in shapes {
        let mut ctx = RenderContext::new();
        ctx.set("id", s.id);
        ctx.set("M", s.m);
        ctx.set("K", s.k);
        ctx.set("Nc", s.n);
        ctx.set("ldA", s.ld_a);
        ctx.set("ldB", s.ld_b);
        ctx.set("ldC", s.ld_c);
        ctx.set("accumulate", s.accumulate);
        ctx.set("vectorWidth", s.vector_width);
        let text =
            render_str(src, &mut ctx, &loader).map_err(|e| GenerateError::Template {
                path: format!("matmul instance `{}`", s.id),
                source: e,
            })?;
        out.push('\n');
        out.push_str(text.trim_start_matches('\n'));
        out.push('\n');
    }
    Ok(out)
}

/// The shape corpus for the committed matmul instance fixture.
pub fn matmul_fixture_shapes() -> Vec<MatmulShape> {
    vec![
        MatmulShape { id: "g_3x3x3", m: 3, k: 3, n: 3, ld_a: 3, ld_b: 3, ld_c: 3, accumulate: false, vector_width: 1 },
        MatmulShape { id: "w_3x3x3", m: 3, k: 3, n: 3, ld_a: 3, ld_b: 3, ld_c: 3, accumulate: false, vector_width: 4 },
        MatmulShape { id: "g_pad_5x4x6", m: 5, k: 4, n: 6, ld_a: 8, ld_b: 4, ld_c: 8, accumulate: false, vector_width: 1 },
        MatmulShape { id: "w_pad_5x4x6", m: 5, k: 4, n: 6, ld_a: 8, ld_b: 4, ld_c: 8, accumulate: false, vector_width: 4 },
        MatmulShape { id: "g_acc_4x5x4", m: 4, k: 5, n: 4, ld_a: 4, ld_b: 8, ld_c: 4, accumulate: true, vector_width: 1 },
        MatmulShape { id: "w_acc_4x5x4", m: 4, k: 5, n: 4, ld_a: 4, ld_b: 8, ld_c: 4, accumulate: true, vector_width: 4 },
        MatmulShape { id: "g_1x7x2", m: 1, k: 7, n: 2, ld_a: 1, ld_b: 7, ld_c: 2, accumulate: false, vector_width: 1 },
        MatmulShape { id: "w_6x2x5", m: 6, k: 2, n: 5, ld_a: 6, ld_b: 2, ld_c: 6, accumulate: false, vector_width: 4 },
    ]
}
