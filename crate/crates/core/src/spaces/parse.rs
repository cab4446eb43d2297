//! Text grammar for [`SpaceSpec`]:
//!
//! ```text
//! spec  := 'X(' int ',' int ')' power?
//!        | 'Y(' int ',' int ')' power?
//!        | 'S(' int ')'
//!        | 'SxS(' int ',' int ')'
//!        | 'Surf(' int ')' power?
//!        | 'W[' spec (',' spec)* ']'
//!        | 'Susp[' spec ']' power
//! power := '^' int
//! ```
//!
//! No whitespace is accepted. `Display` prints exactly this grammar, with
//! `^0` omitted.

use std::fmt;

use super::SpaceSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            self.err(format!("expected '{token}'"))
        }
    }

    fn int(&mut self) -> Result<u32, ParseError> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.err("expected a non-negative integer");
        }
        let text = &self.rest()[..digits];
        match text.parse::<u32>() {
            Ok(v) => {
                self.pos += digits;
                Ok(v)
            }
            Err(_) => self.err(format!("integer '{text}' out of range")),
        }
    }

    fn power(&mut self) -> Result<u32, ParseError> {
        if self.eat("^") {
            self.int()
        } else {
            Ok(0)
        }
    }

    fn pair(&mut self) -> Result<(u32, u32), ParseError> {
        let a = self.int()?;
        self.expect(",")?;
        let b = self.int()?;
        self.expect(")")?;
        Ok((a, b))
    }

    fn spec(&mut self) -> Result<SpaceSpec, ParseError> {
        let start = self.pos;
        let spec = if self.eat("X(") {
            let (m, n) = self.pair()?;
            SpaceSpec::StuntedReal { m, n, k: self.power()? }
        } else if self.eat("Y(") {
            let (m, n) = self.pair()?;
            SpaceSpec::StuntedComplex { m, n, k: self.power()? }
        } else if self.eat("SxS(") {
            let (n, k) = self.pair()?;
            SpaceSpec::SphereProduct { n, k }
        } else if self.eat("Surf(") {
            let genus = self.int()?;
            self.expect(")")?;
            SpaceSpec::SurfaceSuspension {
                genus,
                k: self.power()?,
            }
        } else if self.eat("Susp[") {
            let base = self.spec()?;
            self.expect("]")?;
            self.expect("^")?;
            SpaceSpec::suspension(base, self.int()?)
        } else if self.eat("S(") {
            let n = self.int()?;
            self.expect(")")?;
            SpaceSpec::Sphere { n }
        } else if self.eat("W[") {
            let mut parts = vec![self.spec()?];
            while self.eat(",") {
                parts.push(self.spec()?);
            }
            self.expect("]")?;
            SpaceSpec::Wedge(parts)
        } else {
            return self.err("expected one of X( Y( S( SxS( Surf( W[ Susp[");
        };
        if let Err(e) = spec.validate() {
            return Err(ParseError {
                position: start,
                message: e.to_string(),
            });
        }
        Ok(spec)
    }
}

pub(super) fn parse(input: &str) -> Result<SpaceSpec, ParseError> {
    let mut p = Parser { input, pos: 0 };
    let spec = p.spec()?;
    if p.pos != input.len() {
        return p.err("trailing input");
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_form() {
        assert_eq!(parse("X(4,0)").unwrap(), SpaceSpec::real(4, 0, 0));
        assert_eq!(parse("X(4,0)^0").unwrap(), SpaceSpec::real(4, 0, 0));
        assert_eq!(parse("Y(7,3)^5").unwrap(), SpaceSpec::complex(7, 3, 5));
        assert_eq!(parse("S(4)").unwrap(), SpaceSpec::sphere(4));
        assert_eq!(parse("SxS(2,3)").unwrap(), SpaceSpec::SphereProduct { n: 2, k: 3 });
        assert_eq!(
            parse("Surf(2)^3").unwrap(),
            SpaceSpec::SurfaceSuspension { genus: 2, k: 3 }
        );
        assert_eq!(
            parse("W[S(5),S(4)]").unwrap(),
            SpaceSpec::Wedge(vec![SpaceSpec::sphere(5), SpaceSpec::sphere(4)])
        );
        assert_eq!(
            parse("Susp[X(2,0)]^2").unwrap(),
            SpaceSpec::suspension(SpaceSpec::real(2, 0, 0), 2)
        );
    }

    #[test]
    fn error_positions() {
        let e = parse("X(4,0").unwrap_err();
        assert_eq!(e.position, 5);
        assert_eq!(parse("Q(1)").unwrap_err().position, 0);
        assert_eq!(parse("X(4,0)x").unwrap_err().position, 6);
        assert_eq!(parse("W[S(2),X(3,3)]").unwrap_err().position, 7);
        assert_eq!(parse("X( 4,0)").unwrap_err().position, 2);
        assert!(parse("X(99999999999,0)").is_err());
        assert!(parse("Susp[S(2)]").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn display_round_trip_examples() {
        for text in [
            "X(5,2)",
            "X(3,1)^2",
            "Y(3,2)^1",
            "S(7)",
            "SxS(4,1)",
            "Surf(3)",
            "W[S(5),W[S(4),X(2,0)^1]]",
            "Susp[Y(2,0)]^6",
        ] {
            assert_eq!(parse(text).unwrap().to_string(), text);
        }
    }
}
