//! A small complex-valued expression language for problem definitions
//! supplied through configuration files.
//!
//! Grammar (usual precedence, `^` binds tightest and associates right):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor (('*' | '/') factor)*
//! factor  := unary ('^' factor)?
//! unary   := '-' unary | primary
//! primary := number | ident | ident '(' expr ')' | '(' expr ')'
//! ```
//!
//! Identifiers: free variables (`lambda`, `x`, `xi`, `u1`..`um` by
//! convention — the caller decides which are bound), the imaginary unit `i`,
//! the constant `pi`, and the functions `sech`, `sinh`, `cosh`, `tanh`,
//! `sin`, `cos`, `sqrt`, `exp`, `conj`. All arithmetic is over `Complex64`;
//! `sqrt` and non-integer powers use the principal branch.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Func {
    Sech,
    Sinh,
    Cosh,
    Tanh,
    Sin,
    Cos,
    Sqrt,
    Exp,
    Conj,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sech" => Func::Sech,
            "sinh" => Func::Sinh,
            "cosh" => Func::Cosh,
            "tanh" => Func::Tanh,
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "sqrt" => Func::Sqrt,
            "exp" => Func::Exp,
            "conj" => Func::Conj,
            _ => None,
        })
    }

    fn apply(self, z: Complex64) -> Complex64 {
        match self {
            Func::Sech => Complex64::new(1.0, 0.0) / z.cosh(),
            Func::Sinh => z.sinh(),
            Func::Cosh => z.cosh(),
            Func::Tanh => z.tanh(),
            Func::Sin => z.sin(),
            Func::Cos => z.cos(),
            Func::Sqrt => z.sqrt(),
            Func::Exp => z.exp(),
            Func::Conj => z.conj(),
        }
    }
}

#[derive(Debug, Clone)]
enum Node {
    Num(f64),
    ImagUnit,
    Var(String),
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    Pow(Box<Node>, Box<Node>),
    Call(Func, Box<Node>),
}

/// A parsed expression, evaluable against a set of named complex variables.
#[derive(Debug, Clone)]
pub struct Expr {
    root: Node,
    source: String,
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

impl Expr {
    /// Parse an expression from source text.
    pub fn parse(src: &str) -> Result<Expr> {
        let tokens = tokenize(src)?;
        let mut p = Parser { tokens, pos: 0, src };
        let root = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Config(format!(
                "unexpected trailing input in expression `{src}`"
            )));
        }
        Ok(Expr {
            root,
            source: src.to_string(),
        })
    }

    /// Evaluate with the given variable bindings. Unbound identifiers are an
    /// error (caught at first evaluation; `parse` does not know the calling
    /// context's variable set).
    pub fn eval(&self, env: &[(&str, Complex64)]) -> Result<Complex64> {
        eval_node(&self.root, env, &self.source)
    }

    /// The names of the free variables referenced by this expression.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        collect_vars(&self.root, &mut out);
        out.sort();
        out.dedup();
        out
    }
}

fn collect_vars(node: &Node, out: &mut Vec<String>) {
    match node {
        Node::Var(name) => out.push(name.clone()),
        Node::Neg(a) | Node::Call(_, a) => collect_vars(a, out),
        Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) | Node::Pow(a, b) => {
            collect_vars(a, out);
            collect_vars(b, out);
        }
        Node::Num(_) | Node::ImagUnit => {}
    }
}

fn eval_node(node: &Node, env: &[(&str, Complex64)], src: &str) -> Result<Complex64> {
    Ok(match node {
        Node::Num(v) => Complex64::new(*v, 0.0),
        Node::ImagUnit => Complex64::new(0.0, 1.0),
        Node::Var(name) => {
            if name == "pi" {
                Complex64::new(std::f64::consts::PI, 0.0)
            } else {
                env.iter()
                    .find(|(n, _)| n == name)
                    .map(|(_, v)| *v)
                    .ok_or_else(|| {
                        Error::Config(format!("unknown identifier `{name}` in expression `{src}`"))
                    })?
            }
        }
        Node::Neg(a) => -eval_node(a, env, src)?,
        Node::Add(a, b) => eval_node(a, env, src)? + eval_node(b, env, src)?,
        Node::Sub(a, b) => eval_node(a, env, src)? - eval_node(b, env, src)?,
        Node::Mul(a, b) => eval_node(a, env, src)? * eval_node(b, env, src)?,
        Node::Div(a, b) => eval_node(a, env, src)? / eval_node(b, env, src)?,
        Node::Pow(a, b) => {
            let base = eval_node(a, env, src)?;
            let exp = eval_node(b, env, src)?;
            // Integer powers are computed by repeated multiplication: exact
            // for exact inputs and continuous across branch cuts.
            if exp.im == 0.0 && exp.re.fract() == 0.0 && exp.re.abs() <= 64.0 {
                base.powi(exp.re as i32)
            } else {
                base.powc(exp)
            }
        }
        Node::Call(f, a) => f.apply(eval_node(a, env, src)?),
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        match ch {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            '0'..='9' | '.' => {
                let start = i;
                while i < bytes.len() && matches!(bytes[i] as char, '0'..='9' | '.') {
                    i += 1;
                }
                // scientific notation: 1e-3, 2.5E+4
                if i < bytes.len() && matches!(bytes[i] as char, 'e' | 'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && matches!(bytes[j] as char, '+' | '-') {
                        j += 1;
                    }
                    if j < bytes.len() && (bytes[j] as char).is_ascii_digit() {
                        i = j;
                        while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let text = &src[start..i];
                let v: f64 = text.parse().map_err(|_| {
                    Error::Config(format!("bad numeric literal `{text}` in expression `{src}`"))
                })?;
                out.push(Token::Num(v));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && matches!(bytes[i] as char, 'a'..='z' | 'A'..='Z' | '0'..='9' | '_')
                {
                    i += 1;
                }
                out.push(Token::Ident(src[start..i].to_string()));
            }
            _ => {
                return Err(Error::Config(format!(
                    "unexpected character `{ch}` in expression `{src}`"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Config(format!(
                "expected {t:?} at token {} in expression `{}`",
                self.pos, self.src
            )))
        }
    }

    fn expr(&mut self) -> Result<Node> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    lhs = Node::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    lhs = Node::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Node> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    lhs = Node::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    lhs = Node::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Node> {
        let base = self.unary()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let exp = self.factor()?; // right-associative
            return Ok(Node::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn unary(&mut self) -> Result<Node> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Node> {
        match self.bump() {
            Some(Token::Num(v)) => Ok(Node::Num(v)),
            Some(Token::Ident(name)) => {
                if self.peek() == Some(&Token::LParen) {
                    let func = Func::from_name(&name).ok_or_else(|| {
                        Error::Config(format!(
                            "unknown function `{name}` in expression `{}`",
                            self.src
                        ))
                    })?;
                    self.pos += 1;
                    let arg = self.expr()?;
                    self.expect(Token::RParen)?;
                    Ok(Node::Call(func, Box::new(arg)))
                } else if name == "i" {
                    Ok(Node::ImagUnit)
                } else {
                    Ok(Node::Var(name))
                }
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            other => Err(Error::Config(format!(
                "unexpected token {other:?} in expression `{}`",
                self.src
            ))),
        }
    }
}
