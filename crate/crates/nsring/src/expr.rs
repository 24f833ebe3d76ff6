//! The `--where` filter language.
//!
//! ```text
//! expr := cmp ("&&" cmp)*
//! cmp  := sum (("==" | "!=" | "<" | "<=" | ">" | ">=") sum)?
//! sum  := atom (("+" | "-") atom)*
//! atom := integer | "true" | "false" | identifier | "(" expr ")" | "-" atom
//! ```
//!
//! Identifiers name report fields or family parameters. A comparison that
//! involves an absent optional field is false.

use std::fmt;

use serde_json::{Map, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at column {}: {}", self.position + 1, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpOp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Bool(bool),
    Field(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Cmp(CmpOp, Box<Expr>, Box<Expr>),
    And(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Val {
    Int(i64),
    Bool(bool),
    Null,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(i64),
    Ident(String),
    Op(&'static str),
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    const OPS: [&str; 10] = ["&&", "==", "!=", "<=", ">=", "<", ">", "+", "-", "="];
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = src[start..i].parse().map_err(|_| ParseError {
                position: start,
                message: "integer out of range".into(),
            })?;
            out.push((start, Token::Int(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Token::Ident(src[start..i].to_string())));
        } else if c == '(' {
            out.push((i, Token::LParen));
            i += 1;
        } else if c == ')' {
            out.push((i, Token::RParen));
            i += 1;
        } else if let Some(op) = OPS.iter().find(|op| src[i..].starts_with(**op)) {
            if *op == "=" {
                return Err(ParseError {
                    position: i,
                    message: "use == for equality".into(),
                });
            }
            out.push((i, Token::Op(op)));
            i += op.len();
        } else {
            return Err(ParseError {
                position: i,
                message: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(c, _)| *c)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.column(),
            message: message.into(),
        })
    }

    fn eat_op(&mut self, op: &'static str) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.cmp()?;
        while self.eat_op("&&") {
            let rhs = self.cmp()?;
            lhs = Expr::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn cmp(&mut self) -> Result<Expr, ParseError> {
        let lhs = self.sum()?;
        let op = match self.peek() {
            Some(Token::Op("==")) => CmpOp::Eq,
            Some(Token::Op("!=")) => CmpOp::Ne,
            Some(Token::Op("<")) => CmpOp::Lt,
            Some(Token::Op("<=")) => CmpOp::Le,
            Some(Token::Op(">")) => CmpOp::Gt,
            Some(Token::Op(">=")) => CmpOp::Ge,
            _ => return Ok(lhs),
        };
        self.pos += 1;
        let rhs = self.sum()?;
        Ok(Expr::Cmp(op, Box::new(lhs), Box::new(rhs)))
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.atom()?;
        loop {
            if self.eat_op("+") {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.atom()?));
            } else if self.eat_op("-") {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.atom()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let Some(token) = self.peek().cloned() else {
            return self.error("unexpected end of expression");
        };
        self.pos += 1;
        match token {
            Token::Int(n) => Ok(Expr::Int(n)),
            Token::Ident(name) if name == "true" => Ok(Expr::Bool(true)),
            Token::Ident(name) if name == "false" => Ok(Expr::Bool(false)),
            Token::Ident(name) => Ok(Expr::Field(name)),
            Token::Op("-") => Ok(Expr::Neg(Box::new(self.atom()?))),
            Token::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return self.error("expected )");
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => {
                self.pos -= 1;
                self.error("expected a value")
            }
        }
    }
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr, ParseError> {
        let tokens = tokenize(src)?;
        let mut parser = Parser {
            tokens,
            pos: 0,
            end: src.len(),
        };
        let expr = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return parser.error("unexpected trailing input");
        }
        Ok(expr)
    }

    /// Identifiers referenced by the expression, in order of appearance.
    pub fn fields(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_fields(&mut out);
        out
    }

    fn collect_fields<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Expr::Int(_) | Expr::Bool(_) => {}
            Expr::Field(name) => out.push(name),
            Expr::Neg(a) => a.collect_fields(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Cmp(_, a, b) | Expr::And(a, b) => {
                a.collect_fields(out);
                b.collect_fields(out);
            }
        }
    }

    /// Evaluates against a flat record; a missing or null field is absent.
    pub fn matches(&self, record: &Map<String, Value>) -> Result<bool, String> {
        match self.eval(record)? {
            Val::Bool(b) => Ok(b),
            Val::Null => Ok(false),
            Val::Int(_) => Err("filter must be a condition, not a number".into()),
        }
    }

    fn eval(&self, record: &Map<String, Value>) -> Result<Val, String> {
        Ok(match self {
            Expr::Int(n) => Val::Int(*n),
            Expr::Bool(b) => Val::Bool(*b),
            Expr::Field(name) => match record.get(name) {
                Some(Value::Bool(b)) => Val::Bool(*b),
                Some(Value::Number(n)) => Val::Int(n.as_i64().ok_or("non-integer field")?),
                Some(Value::Null) => Val::Null,
                Some(_) => return Err(format!("field {name} cannot be compared")),
                None => return Err(format!("unknown field {name}")),
            },
            Expr::Neg(a) => match a.eval(record)? {
                Val::Int(n) => Val::Int(-n),
                Val::Null => Val::Null,
                Val::Bool(_) => return Err("cannot negate a boolean".into()),
            },
            Expr::Add(a, b) | Expr::Sub(a, b) => match (a.eval(record)?, b.eval(record)?) {
                (Val::Int(x), Val::Int(y)) => Val::Int(if matches!(self, Expr::Add(..)) {
                    x + y
                } else {
                    x - y
                }),
                (Val::Bool(_), _) | (_, Val::Bool(_)) => {
                    return Err("arithmetic on a boolean".into())
                }
                _ => Val::Null,
            },
            Expr::Cmp(op, a, b) => match (a.eval(record)?, b.eval(record)?) {
                (Val::Null, _) | (_, Val::Null) => Val::Bool(false),
                (Val::Int(x), Val::Int(y)) => Val::Bool(compare(*op, x, y)),
                (Val::Bool(x), Val::Bool(y)) => match op {
                    CmpOp::Eq => Val::Bool(x == y),
                    CmpOp::Ne => Val::Bool(x != y),
                    _ => return Err("booleans only support == and !=".into()),
                },
                _ => return Err("cannot compare a boolean with a number".into()),
            },
            Expr::And(a, b) => match (a.eval(record)?, b.eval(record)?) {
                (Val::Int(_), _) | (_, Val::Int(_)) => {
                    return Err("&& needs conditions on both sides".into())
                }
                (Val::Bool(x), Val::Bool(y)) => Val::Bool(x && y),
                _ => Val::Bool(false),
            },
        })
    }
}

fn compare(op: CmpOp, x: i64, y: i64) -> bool {
    match op {
        CmpOp::Eq => x == y,
        CmpOp::Ne => x != y,
        CmpOp::Lt => x < y,
        CmpOp::Le => x <= y,
        CmpOp::Gt => x > y,
        CmpOp::Ge => x >= y,
    }
}
