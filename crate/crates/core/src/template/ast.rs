use std::rc::Rc;

/// A parsed template: an ordered list of nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct Template {
    pub nodes: Vec<Node>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    /// Raw text, emitted verbatim.
    Text(String),
    /// `{{ expr }}`
    Output(Expr),
    /// `{% if %}` with any number of `{% elif %}` branches and an optional else body.
    If {
        branches: Vec<(Expr, Vec<Node>)>,
        else_body: Option<Vec<Node>>,
    },
    /// `{% for var in expr %}`
    For {
        var: String,
        iter: Expr,
        body: Vec<Node>,
    },
    /// `{% macro name(params) %}` -- contributes nothing at the definition site.
    MacroDef(Rc<MacroDef>),
    /// `{% include "path" %}`
    Include(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct MacroDef {
    pub name: String,
    /// Parameter names with optional default expressions (trailing parameters only).
    pub params: Vec<(String, Option<Expr>)>,
    pub body: Vec<Node>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(i64),
    Real(f64),
    Str(String),
    Bool(bool),
    Ident(String),
    Unary(UnOp, Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call { name: String, args: Vec<Expr> },
    /// Inline conditional text: `value if cond` renders empty when cond is false.
    CondText { value: Box<Expr>, cond: Box<Expr> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnOp {
    Neg,
    Not,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Rem,
    Pow,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    And,
    Or,
}
