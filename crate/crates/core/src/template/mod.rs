//! A small template language covering the subset needed for kernel generation:
//! `{{ expr }}` interpolation, `{% if %}`/`{% for %}` blocks, macro
//! definition and call, and includes. Rendering is strict: undefined
//! variables are errors, never silently empty output.

pub mod ast;
pub mod parser;
pub mod render;
pub mod value;

pub use ast::{Expr, MacroDef, Node, Template};
pub use parser::{parse_template, TemplateParseError};
pub use render::{
    render, render_str, DirLoader, MapLoader, NoLoader, RenderContext, RenderError, TemplateLoader,
};
pub use value::Value;

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn ctx(pairs: &[(&str, Value)]) -> RenderContext {
        let mut c = RenderContext::new();
        for (k, v) in pairs {
            c.set(*k, v.clone());
        }
        c
    }

    fn frag_ctx(init_a: bool) -> RenderContext {
        ctx(&[
            ("initA", Value::Bool(init_a)),
            ("nDof", Value::Int(5)),
            ("nVar", Value::Int(4)),
            ("C", Value::Str("foo".into())),
            ("tempVarsOnStack", Value::Bool(true)),
            ("alignment", Value::Int(32)),
        ])
    }

    #[test]
    fn fixture_fragment_matches_golden_output() {
        let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../templates");
        let src = std::fs::read_to_string(root.join("fixtures/template_frag.tpl")).unwrap();
        let loader = DirLoader(root);
        let out = render_str(&src, &mut frag_ctx(true), &loader).unwrap();
        assert_eq!(
            out,
            "double A[5] __attribute__((aligned(32)));\nfor(int i=0; i<5; ++i) {\n  A[i] = B[i+20] * foo[i];\n}"
        );
        let out = render_str(&src, &mut frag_ctx(false), &loader).unwrap();
        assert_eq!(out, "");
    }

    #[test]
    fn fixture_macros_heap_variant() {
        let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../templates");
        let src = std::fs::read_to_string(root.join("fixtures/alloc_macro.tpl")).unwrap()
            + "{{allocateArray('tmp', 12, true)}}\n{{freeArray('tmp')}}";
        let mut c = ctx(&[
            ("tempVarsOnStack", Value::Bool(false)),
            ("alignment", Value::Int(64)),
        ]);
        let out = render_str(&src, &mut c, &NoLoader).unwrap();
        assert_eq!(
            out,
            "double* tmp = ((double *) _mm_malloc(sizeof(double)*12, 64));\n\
             std::memset(tmp, 0, sizeof(double)*12);\n_mm_free(tmp);"
        );
    }

    #[test]
    fn multibyte_text_around_tags() {
        let mut c = ctx(&[("n", Value::Int(3))]);
        let out = render_str("Σ_d {{n}} × ∂_t", &mut c, &NoLoader).unwrap();
        assert_eq!(out, "Σ_d 3 × ∂_t");
    }

    #[test]
    fn text_only_is_byte_identical() {
        let src = "no tags here\n  just text {single braces} }}\n";
        let ast = parse_template(src).unwrap();
        assert!(matches!(ast.nodes.as_slice(), [Node::Text(t)] if t == src));
        let out = render(&ast, &mut RenderContext::new(), &NoLoader).unwrap();
        assert_eq!(out, src);
    }

    #[test]
    fn minimal_interpolation() {
        let ast = parse_template("A[{{nDof}}]").unwrap();
        assert_eq!(ast.nodes.len(), 3);
        let mut c = ctx(&[("nDof", Value::Int(5))]);
        assert_eq!(render(&ast, &mut c, &NoLoader).unwrap(), "A[5]");
    }

    #[test]
    fn if_single_branch() {
        let ast = parse_template("{% if initA %}x{% endif %}").unwrap();
        match &ast.nodes[0] {
            Node::If { branches, else_body } => {
                assert_eq!(branches.len(), 1);
                assert!(else_body.is_none());
            }
            other => panic!("expected If, got {other:?}"),
        }
        let mut c = ctx(&[("initA", Value::Bool(true))]);
        assert_eq!(render(&ast, &mut c, &NoLoader).unwrap(), "x");
        let mut c = ctx(&[("initA", Value::Bool(false))]);
        assert_eq!(render(&ast, &mut c, &NoLoader).unwrap(), "");
    }

    #[test]
    fn unclosed_for_is_a_parse_error() {
        let err = parse_template("{% for i in range(3) %}").unwrap_err();
        assert!(err.message.contains("unclosed for"), "{err}");
    }

    #[test]
    fn unclosed_delimiter_reports_position() {
        let err = parse_template("ab\ncd {{ x").unwrap_err();
        assert_eq!((err.line, err.col), (2, 4));
    }

    #[test]
    fn arithmetic() {
        let mut c = ctx(&[("nDof", Value::Int(5)), ("nVar", Value::Int(4))]);
        assert_eq!(render_str("{{nDof*nVar}}", &mut c, &NoLoader).unwrap(), "20");
        let mut c = ctx(&[("nDof", Value::Int(4)), ("nDim", Value::Int(2))]);
        assert_eq!(render_str("{{nDof**nDim}}", &mut c, &NoLoader).unwrap(), "16");
        let mut c = RenderContext::new();
        assert_eq!(render_str("{{2**3**2}}", &mut c, &NoLoader).unwrap(), "512");
        assert_eq!(render_str("{{-2**2}}", &mut c, &NoLoader).unwrap(), "-4");
        assert_eq!(render_str("{{7 % 3}}", &mut c, &NoLoader).unwrap(), "1");
        assert_eq!(render_str("{{1.5 + 1}}", &mut c, &NoLoader).unwrap(), "2.5");
    }

    #[test]
    fn strict_undefined_variable() {
        let err = render_str("{{ nope }}", &mut RenderContext::new(), &NoLoader).unwrap_err();
        assert!(matches!(err, RenderError::UndefinedVariable(n) if n == "nope"));
    }

    #[test]
    fn integer_division_requires_divisibility() {
        let mut c = RenderContext::new();
        assert_eq!(render_str("{{6/3}}", &mut c, &NoLoader).unwrap(), "2");
        let err = render_str("{{7/3}}", &mut c, &NoLoader).unwrap_err();
        assert!(matches!(err, RenderError::NonIntegralDivision(7, 3)));
        assert_eq!(render_str("{{7.0/2}}", &mut c, &NoLoader).unwrap(), "3.5");
    }

    #[test]
    fn for_loop_and_scope_discipline() {
        let mut c = RenderContext::new();
        assert_eq!(
            render_str("{% for i in range(2) %}x{{i}}{% endfor %}", &mut c, &NoLoader).unwrap(),
            "x0x1"
        );
        // loop variable not visible after the loop
        let err = render_str(
            "{% for i in range(2) %}{% endfor %}{{i}}",
            &mut RenderContext::new(),
            &NoLoader,
        )
        .unwrap_err();
        assert!(matches!(err, RenderError::UndefinedVariable(n) if n == "i"));
    }

    #[test]
    fn inline_conditional_text() {
        let mut c = ctx(&[("setToZero", Value::Bool(true))]);
        assert_eq!(render_str("{{ \"={0.}\" if setToZero }}", &mut c, &NoLoader).unwrap(), "={0.}");
        let mut c = ctx(&[("setToZero", Value::Bool(false))]);
        assert_eq!(render_str("{{ \"={0.}\" if setToZero }}", &mut c, &NoLoader).unwrap(), "");
    }

    #[test]
    fn macros_with_defaults() {
        let src = "{% macro decl(name, size, zero=false) %}double {{name}}[{{size}}]{{ \"={0.}\" if zero }};{% endmacro %}{{ decl('A', 5) }} {{ decl('B', 2, true) }}";
        let mut c = RenderContext::new();
        assert_eq!(
            render_str(src, &mut c, &NoLoader).unwrap(),
            "double A[5]; double B[2]={0.};"
        );
    }

    #[test]
    fn macro_arity_mismatch() {
        let src = "{% macro m(a, b) %}{{a}}{{b}}{% endmacro %}{{ m(1) }}";
        let err = render_str(src, &mut RenderContext::new(), &NoLoader).unwrap_err();
        assert!(matches!(err, RenderError::MacroArityMismatch { .. }));
    }

    #[test]
    fn macro_params_scoped_to_body() {
        let src = "{% macro m(a) %}{{a}}{% endmacro %}{{ m(1) }}{{ a }}";
        let err = render_str(src, &mut RenderContext::new(), &NoLoader).unwrap_err();
        assert!(matches!(err, RenderError::UndefinedVariable(n) if n == "a"));
    }

    #[test]
    fn include_shares_scope_chain() {
        let mut files = HashMap::new();
        files.insert("inc.tpl".to_string(), "hello {{who}}".to_string());
        let loader = MapLoader(files);
        let mut c = ctx(&[("who", Value::from("world"))]);
        assert_eq!(
            render_str("[{% include \"inc.tpl\" %}]", &mut c, &loader).unwrap(),
            "[hello world]"
        );
        let err = render_str("{% include \"missing.tpl\" %}", &mut c, &loader).unwrap_err();
        assert!(matches!(err, RenderError::IncludeNotFound(_)));
    }

    #[test]
    fn include_recursion_limit() {
        let mut files = HashMap::new();
        files.insert("a.tpl".to_string(), "{% include \"a.tpl\" %}".to_string());
        let loader = MapLoader(files);
        let err = render_str("{% include \"a.tpl\" %}", &mut RenderContext::new(), &loader).unwrap_err();
        assert!(matches!(err, RenderError::RecursionLimit));
    }

    #[test]
    fn elif_else_branches() {
        let src = "{% if a %}A{% elif b %}B{% else %}C{% endif %}";
        let mut c = ctx(&[("a", Value::Bool(false)), ("b", Value::Bool(true))]);
        assert_eq!(render_str(src, &mut c, &NoLoader).unwrap(), "B");
        let mut c = ctx(&[("a", Value::Bool(false)), ("b", Value::Bool(false))]);
        assert_eq!(render_str(src, &mut c, &NoLoader).unwrap(), "C");
    }

    #[test]
    fn error_builtin_raises() {
        let err = render_str("{{ error('size must be positive') }}", &mut RenderContext::new(), &NoLoader)
            .unwrap_err();
        assert!(matches!(err, RenderError::Custom(m) if m == "size must be positive"));
    }

    #[test]
    fn comparisons_and_logic() {
        let mut c = ctx(&[("n", Value::Int(3))]);
        assert_eq!(render_str("{{ n >= 2 and not (n == 4) }}", &mut c, &NoLoader).unwrap(), "true");
        assert_eq!(render_str("{{ n < 2 or n != 3 }}", &mut c, &NoLoader).unwrap(), "false");
    }

    #[test]
    fn unknown_tag_is_an_error() {
        let err = parse_template("{% block x %}").unwrap_err();
        assert!(err.message.contains("unknown tag"));
    }
}
