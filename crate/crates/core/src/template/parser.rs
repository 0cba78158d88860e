use std::rc::Rc;

use thiserror::Error;

use super::ast::{BinOp, Expr, MacroDef, Node, Template, UnOp};

#[derive(Debug, Error, PartialEq)]
#[error("template parse error at {line}:{col}: {message}")]
pub struct TemplateParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

/// Parse a template source into its AST. Delimiters are `{{ }}` and `{% %}`;
/// no whitespace trimming is performed, tags consume exactly their own characters.
pub fn parse_template(text: &str) -> Result<Template, TemplateParseError> {
    let segments = segment(text)?;
    let mut iter = segments.into_iter().peekable();
    let nodes = parse_block(&mut iter, &mut Vec::new())?;
    if let Some(seg) = iter.next() {
        if let SegmentKind::Tag(tag) = seg.kind {
            return Err(err_at(seg.line, seg.col, format!("unexpected '{}'", tag_name(&tag))));
        }
    }
    Ok(Template { nodes })
}

#[derive(Debug)]
struct Segment {
    kind: SegmentKind,
    line: usize,
    col: usize,
}

#[derive(Debug)]
enum SegmentKind {
    Text(String),
    Output(String),
    Tag(String),
}

fn err_at(line: usize, col: usize, message: String) -> TemplateParseError {
    TemplateParseError { line, col, message }
}

/// Split the raw source into text, `{{ }}` and `{% %}` segments, tracking positions.
fn segment(text: &str) -> Result<Vec<Segment>, TemplateParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let mut line = 1;
    let mut col = 1;
    let mut text_start = 0;
    let mut text_line = 1;
    let mut text_col = 1;

    let advance = |b: u8, line: &mut usize, col: &mut usize| {
        if b == b'\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
    };

    while i < bytes.len() {
        let two = if i + 1 < bytes.len() {
            &bytes[i..i + 2]
        } else {
            &b""[..]
        };
        if two == b"{{" || two == b"{%" {
            let two = if two == b"{{" { "{{" } else { "{%" };
            if text_start < i {
                out.push(Segment {
                    kind: SegmentKind::Text(text[text_start..i].to_string()),
                    line: text_line,
                    col: text_col,
                });
            }
            let open_line = line;
            let open_col = col;
            let close = if two == "{{" { "}}" } else { "%}" };
            // advance past the opening delimiter
            advance(bytes[i], &mut line, &mut col);
            advance(bytes[i + 1], &mut line, &mut col);
            let body_start = i + 2;
            let mut j = body_start;
            let mut found = false;
            while j + 1 < bytes.len() {
                if &bytes[j..j + 2] == close.as_bytes() {
                    found = true;
                    break;
                }
                advance(bytes[j], &mut line, &mut col);
                j += 1;
            }
            if !found {
                return Err(err_at(open_line, open_col, format!("unclosed '{two}' delimiter")));
            }
            let body = &text[body_start..j];
            out.push(Segment {
                kind: if two == "{{" {
                    SegmentKind::Output(body.to_string())
                } else {
                    SegmentKind::Tag(body.to_string())
                },
                line: open_line,
                col: open_col,
            });
            advance(bytes[j], &mut line, &mut col);
            advance(bytes[j + 1], &mut line, &mut col);
            i = j + 2;
            text_start = i;
            text_line = line;
            text_col = col;
        } else {
            advance(bytes[i], &mut line, &mut col);
            i += 1;
        }
    }
    if text_start < bytes.len() {
        out.push(Segment {
            kind: SegmentKind::Text(text[text_start..].to_string()),
            line: text_line,
            col: text_col,
        });
    }
    Ok(out)
}

type SegIter = std::iter::Peekable<std::vec::IntoIter<Segment>>;

/// Parse nodes until a closing tag for the innermost open block is seen.
/// `stack` holds the names of currently open blocks for error reporting.
fn parse_block(iter: &mut SegIter, stack: &mut Vec<(String, usize, usize)>) -> Result<Vec<Node>, TemplateParseError> {
    let mut nodes = Vec::new();
    loop {
        let Some(seg) = iter.peek() else {
            if let Some((open, line, col)) = stack.last() {
                return Err(err_at(*line, *col, format!("unclosed {open}")));
            }
            return Ok(nodes);
        };
        match &seg.kind {
            SegmentKind::Text(_) => {
                let Some(seg) = iter.next() else { unreachable!() };
                if let SegmentKind::Text(t) = seg.kind {
                    nodes.push(Node::Text(t));
                }
            }
            SegmentKind::Output(_) => {
                let Some(seg) = iter.next() else { unreachable!() };
                if let SegmentKind::Output(src) = seg.kind {
                    let expr = parse_expr_str(&src, seg.line, seg.col)?;
                    nodes.push(Node::Output(expr));
                }
            }
            SegmentKind::Tag(tag) => {
                let name = tag_name(tag);
                match name {
                    "if" | "for" | "macro" | "include" => {
                        let Some(seg) = iter.next() else { unreachable!() };
                        let SegmentKind::Tag(tag) = seg.kind else { unreachable!() };
                        nodes.push(parse_tag(&tag, seg.line, seg.col, iter, stack)?);
                    }
                    "elif" | "else" | "endif" | "endfor" | "endmacro" => {
                        // closing or continuation tag: leave it for the caller
                        if stack.is_empty() {
                            return Err(err_at(seg.line, seg.col, format!("unexpected '{name}'")));
                        }
                        return Ok(nodes);
                    }
                    other => {
                        return Err(err_at(seg.line, seg.col, format!("unknown tag '{other}'")));
                    }
                }
            }
        }
    }
}

fn tag_name(tag: &str) -> &str {
    tag.trim().split_whitespace().next().unwrap_or("")
}

fn parse_tag(
    tag: &str,
    line: usize,
    col: usize,
    iter: &mut SegIter,
    stack: &mut Vec<(String, usize, usize)>,
) -> Result<Node, TemplateParseError> {
    let trimmed = tag.trim();
    let (name, rest) = match trimmed.find(char::is_whitespace) {
        Some(pos) => (&trimmed[..pos], trimmed[pos..].trim()),
        None => (trimmed, ""),
    };
    match name {
        "if" => {
            let cond = parse_expr_str(rest, line, col)?;
            stack.push(("if".into(), line, col));
            let body = parse_block(iter, stack)?;
            let mut branches = vec![(cond, body)];
            let mut else_body = None;
            loop {
                let Some(seg) = iter.next() else {
                    return Err(err_at(line, col, "unclosed if".into()));
                };
                let SegmentKind::Tag(tag) = seg.kind else {
                    return Err(err_at(seg.line, seg.col, "expected closing tag".into()));
                };
                let t = tag.trim();
                if t == "endif" {
                    break;
                } else if let Some(rest) = t.strip_prefix("elif") {
                    if else_body.is_some() {
                        return Err(err_at(seg.line, seg.col, "elif after else".into()));
                    }
                    let cond = parse_expr_str(rest.trim(), seg.line, seg.col)?;
                    branches.push((cond, parse_block(iter, stack)?));
                } else if t == "else" {
                    if else_body.is_some() {
                        return Err(err_at(seg.line, seg.col, "duplicate else".into()));
                    }
                    else_body = Some(parse_block(iter, stack)?);
                } else {
                    return Err(err_at(seg.line, seg.col, format!("expected endif, got '{}'", tag_name(t))));
                }
            }
            stack.pop();
            Ok(Node::If { branches, else_body })
        }
        "for" => {
            let Some(in_pos) = find_keyword(rest, "in") else {
                return Err(err_at(line, col, "for tag requires 'in'".into()));
            };
            let var = rest[..in_pos].trim();
            if !is_ident(var) {
                return Err(err_at(line, col, format!("invalid loop variable '{var}'")));
            }
            let iter_expr = parse_expr_str(rest[in_pos + 2..].trim(), line, col)?;
            stack.push(("for".into(), line, col));
            let body = parse_block(iter, stack)?;
            expect_end(iter, "endfor", line, col, "for")?;
            stack.pop();
            Ok(Node::For {
                var: var.to_string(),
                iter: iter_expr,
                body,
            })
        }
        "macro" => {
            let (mname, params) = parse_macro_signature(rest, line, col)?;
            stack.push(("macro".into(), line, col));
            let body = parse_block(iter, stack)?;
            expect_end(iter, "endmacro", line, col, "macro")?;
            stack.pop();
            Ok(Node::MacroDef(Rc::new(MacroDef {
                name: mname,
                params,
                body,
            })))
        }
        "include" => {
            let mut lex = Lexer::new(rest, line, col);
            let tok = lex.next_token()?;
            let Token::Str(path) = tok.kind else {
                return Err(err_at(line, col, "include requires a string literal path".into()));
            };
            lex.expect_eof()?;
            Ok(Node::Include(path))
        }
        other => Err(err_at(line, col, format!("unknown tag '{other}'"))),
    }
}

fn expect_end(iter: &mut SegIter, end: &str, line: usize, col: usize, what: &str) -> Result<(), TemplateParseError> {
    match iter.next() {
        Some(seg) => match seg.kind {
            SegmentKind::Tag(t) if t.trim() == end => Ok(()),
            SegmentKind::Tag(t) => Err(err_at(
                seg.line,
                seg.col,
                format!("expected {end}, got '{}'", tag_name(&t)),
            )),
            _ => Err(err_at(seg.line, seg.col, format!("expected {end}"))),
        },
        None => Err(err_at(line, col, format!("unclosed {what}"))),
    }
}

/// Find a standalone keyword (not part of an identifier) at top nesting level.
fn find_keyword(s: &str, kw: &str) -> Option<usize> {
    let bytes = s.as_bytes();
    let mut depth = 0usize;
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth = depth.saturating_sub(1),
            _ => {}
        }
        if depth == 0 && s[i..].starts_with(kw) {
            let before_ok = i == 0 || !is_ident_byte(bytes[i - 1]);
            let after = i + kw.len();
            let after_ok = after >= bytes.len() || !is_ident_byte(bytes[after]);
            if before_ok && after_ok {
                return Some(i);
            }
        }
        i += 1;
    }
    None
}

fn is_ident_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

fn is_ident(s: &str) -> bool {
    !s.is_empty()
        && s.bytes().all(is_ident_byte)
        && !s.as_bytes()[0].is_ascii_digit()
}

fn parse_macro_signature(
    rest: &str,
    line: usize,
    col: usize,
) -> Result<(String, Vec<(String, Option<Expr>)>), TemplateParseError> {
    let Some(open) = rest.find('(') else {
        return Err(err_at(line, col, "macro requires a parameter list".into()));
    };
    let name = rest[..open].trim();
    if !is_ident(name) {
        return Err(err_at(line, col, format!("invalid macro name '{name}'")));
    }
    let Some(close) = rest.rfind(')') else {
        return Err(err_at(line, col, "unclosed macro parameter list".into()));
    };
    let params_src = &rest[open + 1..close];
    let mut params: Vec<(String, Option<Expr>)> = Vec::new();
    let mut seen_default = false;
    for part in split_top_level(params_src) {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        if let Some(eq) = part.find('=') {
            let pname = part[..eq].trim();
            if !is_ident(pname) {
                return Err(err_at(line, col, format!("invalid parameter '{pname}'")));
            }
            let default = parse_expr_str(part[eq + 1..].trim(), line, col)?;
            params.push((pname.to_string(), Some(default)));
            seen_default = true;
        } else {
            if seen_default {
                return Err(err_at(line, col, "positional parameter after default".into()));
            }
            if !is_ident(part) {
                return Err(err_at(line, col, format!("invalid parameter '{part}'")));
            }
            params.push((part.to_string(), None));
        }
    }
    Ok((name.to_string(), params))
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut in_str: Option<u8> = None;
    for (i, &b) in bytes.iter().enumerate() {
        match in_str {
            Some(q) => {
                if b == q {
                    in_str = None;
                }
            }
            None => match b {
                b'\'' | b'"' => in_str = Some(b),
                b'(' => depth += 1,
                b')' => depth = depth.saturating_sub(1),
                b',' if depth == 0 => {
                    parts.push(&s[start..i]);
                    start = i + 1;
                }
                _ => {}
            },
        }
    }
    parts.push(&s[start..]);
    parts
}

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

pub fn parse_expr_str(src: &str, line: usize, col: usize) -> Result<Expr, TemplateParseError> {
    let mut lex = Lexer::new(src, line, col);
    let expr = parse_inline_if(&mut lex)?;
    lex.expect_eof()?;
    Ok(expr)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(i64),
    Real(f64),
    Str(String),
    Ident(String),
    Op(&'static str),
    Eof,
}

#[derive(Debug, Clone)]
struct Spanned {
    kind: Token,
    line: usize,
    col: usize,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
    peeked: Option<Spanned>,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, line: usize, col: usize) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line,
            col,
            peeked: None,
        }
    }

    fn bump(&mut self) -> u8 {
        let b = self.src[self.pos];
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        b
    }

    fn peek_byte(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn error(&self, message: String) -> TemplateParseError {
        err_at(self.line, self.col, message)
    }

    fn peek(&mut self) -> Result<Spanned, TemplateParseError> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lex()?);
        }
        Ok(self.peeked.clone().unwrap())
    }

    fn next_token(&mut self) -> Result<Spanned, TemplateParseError> {
        if let Some(tok) = self.peeked.take() {
            return Ok(tok);
        }
        self.lex()
    }

    fn expect_eof(&mut self) -> Result<(), TemplateParseError> {
        let tok = self.next_token()?;
        if tok.kind != Token::Eof {
            return Err(err_at(tok.line, tok.col, format!("unexpected trailing input: {:?}", tok.kind)));
        }
        Ok(())
    }

    fn lex(&mut self) -> Result<Spanned, TemplateParseError> {
        while self.peek_byte().is_some_and(|b| b.is_ascii_whitespace()) {
            self.bump();
        }
        let line = self.line;
        let col = self.col;
        let Some(b) = self.peek_byte() else {
            return Ok(Spanned { kind: Token::Eof, line, col });
        };
        let kind = match b {
            b'0'..=b'9' => {
                let start = self.pos;
                let mut is_real = false;
                while let Some(c) = self.peek_byte() {
                    if c.is_ascii_digit() {
                        self.bump();
                    } else if c == b'.' && !is_real {
                        is_real = true;
                        self.bump();
                    } else if (c == b'e' || c == b'E')
                        && self.pos > start
                        && self
                            .src
                            .get(self.pos + 1)
                            .is_some_and(|n| n.is_ascii_digit() || *n == b'-' || *n == b'+')
                    {
                        is_real = true;
                        self.bump();
                        self.bump();
                    } else {
                        break;
                    }
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if is_real {
                    Token::Real(text.parse().map_err(|_| self.error(format!("bad number '{text}'")))?)
                } else {
                    Token::Int(text.parse().map_err(|_| self.error(format!("bad number '{text}'")))?)
                }
            }
            b'\'' | b'"' => {
                let quote = self.bump();
                let start = self.pos;
                loop {
                    match self.peek_byte() {
                        Some(c) if c == quote => break,
                        Some(_) => {
                            self.bump();
                        }
                        None => return Err(self.error("unterminated string literal".into())),
                    }
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string();
                self.bump();
                Token::Str(text)
            }
            b if is_ident_byte(b) && !b.is_ascii_digit() => {
                let start = self.pos;
                while self.peek_byte().is_some_and(is_ident_byte) {
                    self.bump();
                }
                Token::Ident(std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string())
            }
            _ => {
                let two: &[u8] = &self.src[self.pos..(self.pos + 2).min(self.src.len())];
                let op2 = match two {
                    b"**" => Some("**"),
                    b"==" => Some("=="),
                    b"!=" => Some("!="),
                    b"<=" => Some("<="),
                    b">=" => Some(">="),
                    _ => None,
                };
                if let Some(op) = op2 {
                    self.bump();
                    self.bump();
                    Token::Op(op)
                } else {
                    let op1 = match b {
                        b'+' => "+",
                        b'-' => "-",
                        b'*' => "*",
                        b'/' => "/",
                        b'%' => "%",
                        b'<' => "<",
                        b'>' => ">",
                        b'(' => "(",
                        b')' => ")",
                        b',' => ",",
                        _ => {
                            return Err(self.error(format!("unexpected character '{}'", b as char)));
                        }
                    };
                    self.bump();
                    Token::Op(op1)
                }
            }
        };
        Ok(Spanned { kind, line, col })
    }
}

/// Lowest precedence: `value if cond` (inline conditional text).
fn parse_inline_if(lex: &mut Lexer) -> Result<Expr, TemplateParseError> {
    let value = parse_or(lex)?;
    if let Token::Ident(id) = &lex.peek()?.kind {
        if id == "if" {
            lex.next_token()?;
            let cond = parse_or(lex)?;
            return Ok(Expr::CondText {
                value: Box::new(value),
                cond: Box::new(cond),
            });
        }
    }
    Ok(value)
}

fn parse_or(lex: &mut Lexer) -> Result<Expr, TemplateParseError> {
    let mut lhs = parse_and(lex)?;
    while matches!(&lex.peek()?.kind, Token::Ident(id) if id == "or") {
        lex.next_token()?;
        let rhs = parse_and(lex)?;
        lhs = Expr::Binary(BinOp::Or, Box::new(lhs), Box::new(rhs));
    }
    Ok(lhs)
}

fn parse_and(lex: &mut Lexer) -> Result<Expr, TemplateParseError> {
    let mut lhs = parse_not(lex)?;
    while matches!(&lex.peek()?.kind, Token::Ident(id) if id == "and") {
        lex.next_token()?;
        let rhs = parse_not(lex)?;
        lhs = Expr::Binary(BinOp::And, Box::new(lhs), Box::new(rhs));
    }
    Ok(lhs)
}

fn parse_not(lex: &mut Lexer) -> Result<Expr, TemplateParseError> {
    if matches!(&lex.peek()?.kind, Token::Ident(id) if id == "not") {
        lex.next_token()?;
        let inner = parse_not(lex)?;
        return Ok(Expr::Unary(UnOp::Not, Box::new(inner)));
    }
    parse_cmp(lex)
}

fn parse_cmp(lex: &mut Lexer) -> Result<Expr, TemplateParseError> {
    let lhs = parse_addsub(lex)?;
    let op = match &lex.peek()?.kind {
        Token::Op("==") => Some(BinOp::Eq),
        Token::Op("!=") => Some(BinOp::Ne),
        Token::Op("<") => Some(BinOp::Lt),
        Token::Op("<=") => Some(BinOp::Le),
        Token::Op(">") => Some(BinOp::Gt),
        Token::Op(">=") => Some(BinOp::Ge),
        _ => None,
    };
    if let Some(op) = op {
        lex.next_token()?;
        let rhs = parse_addsub(lex)?;
        return Ok(Expr::Binary(op, Box::new(lhs), Box::new(rhs)));
    }
    Ok(lhs)
}

fn parse_addsub(lex: &mut Lexer) -> Result<Expr, TemplateParseError> {
    let mut lhs = parse_muldiv(lex)?;
    loop {
        let op = match &lex.peek()?.kind {
            Token::Op("+") => BinOp::Add,
            Token::Op("-") => BinOp::Sub,
            _ => break,
        };
        lex.next_token()?;
        let rhs = parse_muldiv(lex)?;
        lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
    }
    Ok(lhs)
}

fn parse_muldiv(lex: &mut Lexer) -> Result<Expr, TemplateParseError> {
    let mut lhs = parse_unary(lex)?;
    loop {
        let op = match &lex.peek()?.kind {
            Token::Op("*") => BinOp::Mul,
            Token::Op("/") => BinOp::Div,
            Token::Op("%") => BinOp::Rem,
            _ => break,
        };
        lex.next_token()?;
        let rhs = parse_unary(lex)?;
        lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
    }
    Ok(lhs)
}

fn parse_unary(lex: &mut Lexer) -> Result<Expr, TemplateParseError> {
    if matches!(&lex.peek()?.kind, Token::Op("-")) {
        lex.next_token()?;
        let inner = parse_unary(lex)?;
        return Ok(Expr::Unary(UnOp::Neg, Box::new(inner)));
    }
    parse_pow(lex)
}

fn parse_pow(lex: &mut Lexer) -> Result<Expr, TemplateParseError> {
    let base = parse_atom(lex)?;
    if matches!(&lex.peek()?.kind, Token::Op("**")) {
        lex.next_token()?;
        // right associative; unary minus on the exponent binds tighter
        let exp = parse_unary(lex)?;
        return Ok(Expr::Binary(BinOp::Pow, Box::new(base), Box::new(exp)));
    }
    Ok(base)
}

fn parse_atom(lex: &mut Lexer) -> Result<Expr, TemplateParseError> {
    let tok = lex.next_token()?;
    match tok.kind {
        Token::Int(v) => Ok(Expr::Int(v)),
        Token::Real(v) => Ok(Expr::Real(v)),
        Token::Str(s) => Ok(Expr::Str(s)),
        Token::Ident(id) => match id.as_str() {
            "true" => Ok(Expr::Bool(true)),
            "false" => Ok(Expr::Bool(false)),
            _ => {
                if matches!(&lex.peek()?.kind, Token::Op("(")) {
                    lex.next_token()?;
                    let mut args = Vec::new();
                    if !matches!(&lex.peek()?.kind, Token::Op(")")) {
                        loop {
                            args.push(parse_inline_if(lex)?);
                            match lex.next_token()?.kind {
                                Token::Op(",") => continue,
                                Token::Op(")") => break,
                                other => {
                                    return Err(err_at(tok.line, tok.col, format!("expected ',' or ')', got {other:?}")));
                                }
                            }
                        }
                    } else {
                        lex.next_token()?;
                    }
                    Ok(Expr::Call { name: id, args })
                } else {
                    Ok(Expr::Ident(id))
                }
            }
        },
        Token::Op("(") => {
            let inner = parse_inline_if(lex)?;
            match lex.next_token()?.kind {
                Token::Op(")") => Ok(inner),
                other => Err(err_at(tok.line, tok.col, format!("expected ')', got {other:?}"))),
            }
        }
        other => Err(err_at(tok.line, tok.col, format!("unexpected token {other:?}"))),
    }
}
