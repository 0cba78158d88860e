use std::collections::HashMap;

use thiserror::Error;

use super::ast::{BinOp, Expr, Node, Template, UnOp};
use super::parser::{parse_template, TemplateParseError};
use super::value::Value;

const MAX_DEPTH: usize = 64;

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("undefined variable '{0}'")]
    UndefinedVariable(String),
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("non-integral division: {0} / {1}")]
    NonIntegralDivision(i64, i64),
    #[error("include not found: '{0}'")]
    IncludeNotFound(String),
    #[error("macro '{name}' expects {expected} argument(s), got {got}")]
    MacroArityMismatch {
        name: String,
        expected: String,
        got: usize,
    },
    #[error("recursion limit exceeded (depth > {MAX_DEPTH})")]
    RecursionLimit,
    #[error("error in included template '{0}': {1}")]
    IncludeParse(String, TemplateParseError),
    #[error("{0}")]
    Custom(String),
}

/// Chain of scopes; lookups walk from the innermost scope outwards.
#[derive(Debug, Clone, Default)]
pub struct RenderContext {
    scopes: Vec<HashMap<String, Value>>,
}

impl RenderContext {
    pub fn new() -> Self {
        RenderContext {
            scopes: vec![HashMap::new()],
        }
    }

    pub fn from_map(root: HashMap<String, Value>) -> Self {
        RenderContext { scopes: vec![root] }
    }

    pub fn set(&mut self, name: impl Into<String>, value: impl Into<Value>) {
        self.scopes
            .last_mut()
            .expect("context has at least one scope")
            .insert(name.into(), value.into());
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.scopes.iter().rev().find_map(|s| s.get(name))
    }

    fn push(&mut self) {
        self.scopes.push(HashMap::new());
    }

    fn pop(&mut self) {
        self.scopes.pop();
    }
}

/// Resolves include paths to template source text. Must be read-only during rendering.
pub trait TemplateLoader {
    fn load(&self, path: &str) -> Option<String>;
}

/// Loader with no templates; includes always fail.
pub struct NoLoader;

impl TemplateLoader for NoLoader {
    fn load(&self, _path: &str) -> Option<String> {
        None
    }
}

/// Loader over an in-memory path -> source map.
pub struct MapLoader(pub HashMap<String, String>);

impl TemplateLoader for MapLoader {
    fn load(&self, path: &str) -> Option<String> {
        self.0.get(path).cloned()
    }
}

/// Loader rooted at a filesystem directory.
pub struct DirLoader(pub std::path::PathBuf);

impl TemplateLoader for DirLoader {
    fn load(&self, path: &str) -> Option<String> {
        std::fs::read_to_string(self.0.join(path)).ok()
    }
}

pub fn render(
    ast: &Template,
    ctx: &mut RenderContext,
    loader: &dyn TemplateLoader,
) -> Result<String, RenderError> {
    let mut out = String::new();
    let mut r = Renderer { loader, depth: 0 };
    r.render_nodes(&ast.nodes, ctx, &mut out)?;
    Ok(out)
}

/// Convenience: parse and render `text` in one call.
pub fn render_str(
    text: &str,
    ctx: &mut RenderContext,
    loader: &dyn TemplateLoader,
) -> Result<String, RenderError> {
    let ast = parse_template(text).map_err(|e| RenderError::Custom(e.to_string()))?;
    render(&ast, ctx, loader)
}

struct Renderer<'a> {
    loader: &'a dyn TemplateLoader,
    depth: usize,
}

impl<'a> Renderer<'a> {
    fn render_nodes(
        &mut self,
        nodes: &[Node],
        ctx: &mut RenderContext,
        out: &mut String,
    ) -> Result<(), RenderError> {
        for node in nodes {
            match node {
                Node::Text(t) => out.push_str(t),
                Node::Output(expr) => {
                    let v = self.eval(expr, ctx)?;
                    out.push_str(&stringify(&v)?);
                }
                Node::If { branches, else_body } => {
                    let mut taken = false;
                    for (cond, body) in branches {
                        if truthy(&self.eval(cond, ctx)?)? {
                            self.render_nodes(body, ctx, out)?;
                            taken = true;
                            break;
                        }
                    }
                    if !taken {
                        if let Some(body) = else_body {
                            self.render_nodes(body, ctx, out)?;
                        }
                    }
                }
                Node::For { var, iter, body } => {
                    let items = match self.eval(iter, ctx)? {
                        Value::List(items) => items,
                        other => {
                            return Err(RenderError::TypeMismatch(format!(
                                "cannot iterate over {}",
                                other.type_name()
                            )));
                        }
                    };
                    for item in items {
                        ctx.push();
                        ctx.set(var.clone(), item);
                        let res = self.render_nodes(body, ctx, out);
                        ctx.pop();
                        res?;
                    }
                }
                Node::MacroDef(def) => {
                    ctx.set(def.name.clone(), Value::Macro(def.clone()));
                }
                Node::Include(path) => {
                    self.depth += 1;
                    if self.depth > MAX_DEPTH {
                        return Err(RenderError::RecursionLimit);
                    }
                    let src = self
                        .loader
                        .load(path)
                        .ok_or_else(|| RenderError::IncludeNotFound(path.clone()))?;
                    let ast = parse_template(&src)
                        .map_err(|e| RenderError::IncludeParse(path.clone(), e))?;
                    // included file renders in the current scope chain
                    self.render_nodes(&ast.nodes, ctx, out)?;
                    self.depth -= 1;
                }
            }
        }
        Ok(())
    }

    fn eval(&mut self, expr: &Expr, ctx: &mut RenderContext) -> Result<Value, RenderError> {
        match expr {
            Expr::Int(v) => Ok(Value::Int(*v)),
            Expr::Real(v) => Ok(Value::Real(*v)),
            Expr::Str(s) => Ok(Value::Str(s.clone())),
            Expr::Bool(b) => Ok(Value::Bool(*b)),
            Expr::Ident(name) => ctx
                .get(name)
                .cloned()
                .ok_or_else(|| RenderError::UndefinedVariable(name.clone())),
            Expr::Unary(op, inner) => {
                let v = self.eval(inner, ctx)?;
                match (op, v) {
                    (UnOp::Neg, Value::Int(i)) => Ok(Value::Int(-i)),
                    (UnOp::Neg, Value::Real(r)) => Ok(Value::Real(-r)),
                    (UnOp::Not, Value::Bool(b)) => Ok(Value::Bool(!b)),
                    (op, v) => Err(RenderError::TypeMismatch(format!(
                        "cannot apply {op:?} to {}",
                        v.type_name()
                    ))),
                }
            }
            Expr::Binary(op, lhs, rhs) => self.eval_binary(*op, lhs, rhs, ctx),
            Expr::CondText { value, cond } => {
                if truthy(&self.eval(cond, ctx)?)? {
                    self.eval(value, ctx)
                } else {
                    Ok(Value::Str(String::new()))
                }
            }
            Expr::Call { name, args } => self.eval_call(name, args, ctx),
        }
    }

    fn eval_binary(
        &mut self,
        op: BinOp,
        lhs: &Expr,
        rhs: &Expr,
        ctx: &mut RenderContext,
    ) -> Result<Value, RenderError> {
        // short-circuit logic first
        if matches!(op, BinOp::And | BinOp::Or) {
            let l = truthy(&self.eval(lhs, ctx)?)?;
            return match (op, l) {
                (BinOp::And, false) => Ok(Value::Bool(false)),
                (BinOp::Or, true) => Ok(Value::Bool(true)),
                _ => Ok(Value::Bool(truthy(&self.eval(rhs, ctx)?)?)),
            };
        }
        let l = self.eval(lhs, ctx)?;
        let r = self.eval(rhs, ctx)?;
        match op {
            BinOp::Add => numeric_or_concat(l, r),
            BinOp::Sub => numeric_op(l, r, "-", |a, b| a.checked_sub(b), |a, b| a - b),
            BinOp::Mul => numeric_op(l, r, "*", |a, b| a.checked_mul(b), |a, b| a * b),
            BinOp::Div => match (l, r) {
                (Value::Int(a), Value::Int(b)) => {
                    if b == 0 {
                        Err(RenderError::TypeMismatch("division by zero".into()))
                    } else if a % b != 0 {
                        Err(RenderError::NonIntegralDivision(a, b))
                    } else {
                        Ok(Value::Int(a / b))
                    }
                }
                (l, r) => {
                    let (a, b) = (as_real(&l)?, as_real(&r)?);
                    Ok(Value::Real(a / b))
                }
            },
            BinOp::Rem => match (l, r) {
                (Value::Int(a), Value::Int(b)) => {
                    if b == 0 {
                        Err(RenderError::TypeMismatch("modulo by zero".into()))
                    } else {
                        Ok(Value::Int(a.rem_euclid(b)))
                    }
                }
                (l, r) => Err(RenderError::TypeMismatch(format!(
                    "'%' requires integers, got {} and {}",
                    l.type_name(),
                    r.type_name()
                ))),
            },
            BinOp::Pow => match (l, r) {
                (Value::Int(a), Value::Int(b)) => {
                    if b < 0 {
                        Err(RenderError::TypeMismatch("negative integer exponent".into()))
                    } else {
                        let e = u32::try_from(b)
                            .map_err(|_| RenderError::TypeMismatch("exponent too large".into()))?;
                        a.checked_pow(e)
                            .map(Value::Int)
                            .ok_or_else(|| RenderError::TypeMismatch("integer overflow in '**'".into()))
                    }
                }
                (l, r) => {
                    let (a, b) = (as_real(&l)?, as_real(&r)?);
                    Ok(Value::Real(a.powf(b)))
                }
            },
            BinOp::Eq => Ok(Value::Bool(values_eq(&l, &r))),
            BinOp::Ne => Ok(Value::Bool(!values_eq(&l, &r))),
            BinOp::Lt | BinOp::Le | BinOp::Gt | BinOp::Ge => {
                let (a, b) = (as_real(&l)?, as_real(&r)?);
                Ok(Value::Bool(match op {
                    BinOp::Lt => a < b,
                    BinOp::Le => a <= b,
                    BinOp::Gt => a > b,
                    BinOp::Ge => a >= b,
                    _ => unreachable!(),
                }))
            }
            BinOp::And | BinOp::Or => unreachable!(),
        }
    }

    fn eval_call(
        &mut self,
        name: &str,
        args: &[Expr],
        ctx: &mut RenderContext,
    ) -> Result<Value, RenderError> {
        match name {
            "range" => {
                if args.len() != 1 {
                    return Err(RenderError::TypeMismatch("range() takes one argument".into()));
                }
                match self.eval(&args[0], ctx)? {
                    Value::Int(n) => Ok(Value::List((0..n.max(0)).map(Value::Int).collect())),
                    other => Err(RenderError::TypeMismatch(format!(
                        "range() requires an integer, got {}",
                        other.type_name()
                    ))),
                }
            }
            "error" => {
                let msg = args
                    .first()
                    .map(|a| self.eval(a, ctx).and_then(|v| stringify(&v)))
                    .transpose()?
                    .unwrap_or_default();
                Err(RenderError::Custom(msg))
            }
            _ => {
                let Some(Value::Macro(def)) = ctx.get(name).cloned() else {
                    return match ctx.get(name) {
                        Some(v) => Err(RenderError::TypeMismatch(format!(
                            "'{name}' is a {}, not callable",
                            v.type_name()
                        ))),
                        None => Err(RenderError::UndefinedVariable(name.to_string())),
                    };
                };
                let required = def.params.iter().filter(|(_, d)| d.is_none()).count();
                if args.len() < required || args.len() > def.params.len() {
                    return Err(RenderError::MacroArityMismatch {
                        name: name.to_string(),
                        expected: if required == def.params.len() {
                            format!("{required}")
                        } else {
                            format!("{required}..{}", def.params.len())
                        },
                        got: args.len(),
                    });
                }
                let mut bound = Vec::with_capacity(def.params.len());
                for (i, (pname, default)) in def.params.iter().enumerate() {
                    let v = if i < args.len() {
                        self.eval(&args[i], ctx)?
                    } else {
                        self.eval(default.as_ref().expect("checked above"), ctx)?
                    };
                    bound.push((pname.clone(), v));
                }
                self.depth += 1;
                if self.depth > MAX_DEPTH {
                    return Err(RenderError::RecursionLimit);
                }
                ctx.push();
                for (pname, v) in bound {
                    ctx.set(pname, v);
                }
                let mut out = String::new();
                let res = self.render_nodes(&def.body, ctx, &mut out);
                ctx.pop();
                self.depth -= 1;
                res?;
                Ok(Value::Str(out))
            }
        }
    }
}

fn truthy(v: &Value) -> Result<bool, RenderError> {
    match v {
        Value::Bool(b) => Ok(*b),
        other => Err(RenderError::TypeMismatch(format!(
            "condition must be a boolean, got {}",
            other.type_name()
        ))),
    }
}

fn as_real(v: &Value) -> Result<f64, RenderError> {
    match v {
        Value::Int(i) => Ok(*i as f64),
        Value::Real(r) => Ok(*r),
        other => Err(RenderError::TypeMismatch(format!(
            "expected a number, got {}",
            other.type_name()
        ))),
    }
}

fn values_eq(l: &Value, r: &Value) -> bool {
    match (l, r) {
        (Value::Int(a), Value::Int(b)) => a == b,
        (Value::Bool(a), Value::Bool(b)) => a == b,
        (Value::Str(a), Value::Str(b)) => a == b,
        (l, r) => match (as_real(l), as_real(r)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        },
    }
}

fn numeric_op(
    l: Value,
    r: Value,
    sym: &str,
    int_op: impl Fn(i64, i64) -> Option<i64>,
    real_op: impl Fn(f64, f64) -> f64,
) -> Result<Value, RenderError> {
    match (l, r) {
        (Value::Int(a), Value::Int(b)) => int_op(a, b)
            .map(Value::Int)
            .ok_or_else(|| RenderError::TypeMismatch(format!("integer overflow in '{sym}'"))),
        (l, r) => Ok(Value::Real(real_op(as_real(&l)?, as_real(&r)?))),
    }
}

fn numeric_or_concat(l: Value, r: Value) -> Result<Value, RenderError> {
    match (l, r) {
        (Value::Str(a), Value::Str(b)) => Ok(Value::Str(a + &b)),
        (l, r) => numeric_op(l, r, "+", |a, b| a.checked_add(b), |a, b| a + b),
    }
}

/// Convert a value to its textual form in rendered output.
/// Reals use Rust's shortest round-trip formatting so numeric context values
/// survive a generate/parse cycle bit-exactly.
pub fn stringify(v: &Value) -> Result<String, RenderError> {
    match v {
        Value::Int(i) => Ok(i.to_string()),
        Value::Real(r) => Ok(format!("{r:?}")),
        Value::Str(s) => Ok(s.clone()),
        Value::Bool(b) => Ok(b.to_string()),
        other => Err(RenderError::TypeMismatch(format!(
            "cannot render a {} value",
            other.type_name()
        ))),
    }
}
