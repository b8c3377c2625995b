use super::{DiagramError, Generator, MorphismTerm, WireType, Wires};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Star,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, DiagramError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        let single = match c {
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            '[' => Some(Token::LBracket),
            ']' => Some(Token::RBracket),
            ',' => Some(Token::Comma),
            '*' => Some(Token::Star),
            _ => None,
        };
        if let Some(tok) = single {
            tokens.push((pos, tok));
            chars.next();
        } else if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_alphanumeric() || c == '_' {
            let mut ident = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if !(c.is_ascii_alphanumeric() || c == '_') {
                    break;
                }
                ident.push(c);
                chars.next();
            }
            tokens.push((pos, Token::Ident(ident)));
        } else {
            return Err(DiagramError::Parse {
                position: pos,
                message: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    next: usize,
    end: usize,
}

impl Parser {
    fn position(&self) -> usize {
        self.tokens.get(self.next).map_or(self.end, |(p, _)| *p)
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.next).map(|(_, t)| t)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, DiagramError> {
        Err(DiagramError::Parse {
            position: self.position(),
            message: message.into(),
        })
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<(), DiagramError> {
        if self.peek() == Some(&want) {
            self.next += 1;
            Ok(())
        } else {
            self.error(format!("expected {what}"))
        }
    }

    fn is_compose_op(&self) -> bool {
        matches!(self.peek(), Some(Token::Ident(s)) if s == "o")
    }

    fn term(&mut self) -> Result<MorphismTerm, DiagramError> {
        let mut acc = self.tensor()?;
        while self.is_compose_op() {
            let op_pos = self.position();
            self.next += 1;
            let inner = self.tensor()?;
            acc = MorphismTerm::compose(acc, inner).map_err(|e| match e {
                DiagramError::Type {
                    expected, actual, ..
                } => DiagramError::Type {
                    position: op_pos,
                    expected,
                    actual,
                },
                other => other,
            })?;
        }
        Ok(acc)
    }

    fn tensor(&mut self) -> Result<MorphismTerm, DiagramError> {
        let mut acc = self.atom()?;
        while self.peek() == Some(&Token::Star) {
            self.next += 1;
            acc = MorphismTerm::tensor(acc, self.atom()?);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<MorphismTerm, DiagramError> {
        match self.peek().cloned() {
            Some(Token::LParen) => {
                self.next += 1;
                let t = self.term()?;
                self.expect(Token::RParen, "')'")?;
                Ok(t)
            }
            Some(Token::Ident(name)) if name != "o" => {
                let start = self.position();
                self.next += 1;
                match name.as_str() {
                    "idA" => Ok(MorphismTerm::identity(vec![WireType::A])),
                    "idD" => Ok(MorphismTerm::identity(vec![WireType::D])),
                    "id" => Ok(MorphismTerm::identity(self.wire_list()?)),
                    "tau" => match self.wire_list()?.as_slice() {
                        [x, y] => Ok(MorphismTerm::generator(Generator::Tau(*x, *y))),
                        _ => Err(DiagramError::Parse {
                            position: start,
                            message: "tau takes exactly two wire types".into(),
                        }),
                    },
                    _ => match Generator::from_name(&name) {
                        Some(g) => Ok(MorphismTerm::generator(g)),
                        None => Err(DiagramError::Parse {
                            position: start,
                            message: format!("unknown generator {name:?}"),
                        }),
                    },
                }
            }
            Some(_) => self.error("expected a generator or '('"),
            None => self.error("unexpected end of input"),
        }
    }

    fn wire_list(&mut self) -> Result<Wires, DiagramError> {
        self.expect(Token::LBracket, "'['")?;
        let mut wires = Vec::new();
        if self.peek() == Some(&Token::RBracket) {
            self.next += 1;
            return Ok(wires);
        }
        loop {
            match self.peek() {
                Some(Token::Ident(s)) if s == "A" => wires.push(WireType::A),
                Some(Token::Ident(s)) if s == "D" => wires.push(WireType::D),
                _ => return self.error("expected wire type A or D"),
            }
            self.next += 1;
            match self.peek() {
                Some(Token::Comma) => self.next += 1,
                Some(Token::RBracket) => {
                    self.next += 1;
                    return Ok(wires);
                }
                _ => return self.error("expected ',' or ']'"),
            }
        }
    }
}

/// Parses and type-checks a term. Positions in errors are byte offsets.
pub fn parse_term(text: &str) -> Result<MorphismTerm, DiagramError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        next: 0,
        end: text.len(),
    };
    let term = parser.term()?;
    if parser.next != parser.tokens.len() {
        return parser.error("trailing input");
    }
    Ok(term)
}
