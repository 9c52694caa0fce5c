//! Text formats for frameworks.
//!
//! APX: `arg(NAME).` and `att(NAME,NAME).` statements, `%` comments to end of
//! line. TGF: one node id per line, a line holding exactly `#`, then
//! `SRC DST` edge lines.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::framework::{is_valid_name, ArgumentId, ArgumentationFramework};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Apx,
    Tgf,
}

impl Format {
    /// `.tgf` files are TGF, everything else APX.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("tgf") => Format::Tgf,
            _ => Format::Apx,
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "apx" => Ok(Format::Apx),
            "tgf" => Ok(Format::Tgf),
            _ => Err(Error::InvalidConfig(format!("unknown format {s:?}"))),
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<ArgumentationFramework> {
    match format {
        Format::Apx => parse_apx(text),
        Format::Tgf => parse_tgf(text),
    }
}

/// Canonical serialization: arguments, then attacks, both in lexicographic order.
pub fn serialize(framework: &ArgumentationFramework, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Apx => {
            for a in framework.arguments() {
                let _ = writeln!(out, "arg({a}).");
            }
            for (f, t) in framework.attacks() {
                let _ = writeln!(out, "att({f},{t}).");
            }
        }
        Format::Tgf => {
            for a in framework.arguments() {
                let _ = writeln!(out, "{a}");
            }
            out.push_str("#\n");
            for (f, t) in framework.attacks() {
                let _ = writeln!(out, "{f} {t}");
            }
        }
    }
    out
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.bytes.len()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn token(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an argument name"));
        }
        // Only ASCII bytes were consumed, so the slice is valid UTF-8.
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii token"))
    }
}

pub fn parse_apx(text: &str) -> Result<ArgumentationFramework> {
    let mut args: BTreeSet<ArgumentId> = BTreeSet::new();
    let mut attacks: Vec<(&str, &str, usize)> = Vec::new();

    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('%').next().unwrap_or("");
        let mut cur = Cursor {
            bytes: line.as_bytes(),
            pos: 0,
            line: ln + 1,
        };
        while !cur.at_end() {
            let keyword = cur.token()?;
            match keyword {
                "arg" => {
                    cur.expect(b'(')?;
                    let name = cur.token()?;
                    cur.expect(b')')?;
                    cur.expect(b'.')?;
                    args.insert(ArgumentId::new(name)?);
                }
                "att" => {
                    cur.expect(b'(')?;
                    let from = cur.token()?;
                    cur.expect(b',')?;
                    let to = cur.token()?;
                    cur.expect(b')')?;
                    cur.expect(b'.')?;
                    attacks.push((from, to, ln + 1));
                }
                other => {
                    return Err(Error::Syntax {
                        line: ln + 1,
                        column: 1,
                        message: format!("unknown statement {other:?}"),
                    })
                }
            }
        }
    }

    build(args, attacks)
}

pub fn parse_tgf(text: &str) -> Result<ArgumentationFramework> {
    let mut args: BTreeSet<ArgumentId> = BTreeSet::new();
    let mut attacks: Vec<(&str, &str, usize)> = Vec::new();
    let mut in_edges = false;

    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line == "#" {
            if in_edges {
                return Err(syntax(ln + 1, 1, "repeated '#' separator"));
            }
            in_edges = true;
            continue;
        }
        let mut tokens = line.split_whitespace();
        if in_edges {
            // Anything after the two endpoints is an edge label and ignored.
            let from = tokens.next().unwrap_or_default();
            let to = tokens
                .next()
                .ok_or_else(|| syntax(ln + 1, 1, "edge line needs two node ids"))?;
            for t in [from, to] {
                if !is_valid_name(t) {
                    return Err(Error::InvalidArgumentName(t.to_string()));
                }
            }
            attacks.push((from, to, ln + 1));
        } else {
            // Node labels after the id are ignored.
            let node = tokens.next().unwrap_or_default();
            args.insert(ArgumentId::new(node)?);
        }
    }
    if !in_edges {
        return Err(syntax(text.lines().count().max(1), 1, "missing '#' separator"));
    }

    build(args, attacks)
}

fn syntax(line: usize, column: usize, message: &str) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.to_string(),
    }
}

fn build(args: BTreeSet<ArgumentId>, attacks: Vec<(&str, &str, usize)>) -> Result<ArgumentationFramework> {
    let mut edges = Vec::with_capacity(attacks.len());
    for (from, to, line) in attacks {
        let resolve = |name: &str| -> Result<ArgumentId> {
            let a = ArgumentId::new(name)?;
            if args.contains(&a) {
                Ok(a)
            } else {
                Err(Error::UndeclaredArgument {
                    name: name.to_string(),
                    line,
                })
            }
        };
        edges.push((resolve(from)?, resolve(to)?));
    }
    ArgumentationFramework::new(args, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::running_example;

    const RUNNING_APX: &str = "\
% running example
arg(A).
arg(B).
arg(C).
arg(D).
arg(E).
att(A,B).
att(C,B).
att(C,D).
att(D,C).
att(D,E).
";

    #[test]
    fn smallest_apx() {
        let f = parse_apx("arg(a).\narg(b).\natt(a,b).").unwrap();
        assert_eq!(
            f,
            ArgumentationFramework::from_names(&["a", "b"], &[("a", "b")]).unwrap()
        );
    }

    #[test]
    fn running_example_apx() {
        assert_eq!(parse_apx(RUNNING_APX).unwrap(), running_example());
    }

    #[test]
    fn apx_whitespace_comments_and_duplicates() {
        let text = "  arg( a ) . % first\n\narg(a).\narg(b). att(a , b).\natt(a,b).\n%att(b,a).\n";
        let f = parse_apx(text).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.attack_count(), 1);
    }

    #[test]
    fn apx_undeclared_argument() {
        assert_eq!(
            parse_apx("att(a,b)."),
            Err(Error::UndeclaredArgument {
                name: "a".into(),
                line: 1
            })
        );
    }

    #[test]
    fn apx_syntax_errors_report_position() {
        match parse_apx("arg(a).\narg(b\n") {
            Err(Error::Syntax { line, column, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(column, 6);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_apx("foo(a)."), Err(Error::Syntax { .. })));
        assert!(matches!(parse_apx("arg(a)"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_apx("att(a)."), Err(Error::Syntax { .. })));
    }

    #[test]
    fn tgf_basic() {
        let f = parse_tgf("a\nb\n#\na b").unwrap();
        assert_eq!(
            f,
            ArgumentationFramework::from_names(&["a", "b"], &[("a", "b")]).unwrap()
        );
        let g = parse_tgf("a\n#\n").unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.attack_count(), 0);
    }

    #[test]
    fn tgf_errors() {
        assert!(matches!(parse_tgf("a\nb\n"), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_tgf("a\n#\na b\n"),
            Err(Error::UndeclaredArgument { .. })
        ));
        assert!(matches!(parse_tgf("a\n#\na\n"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn canonical_serialization() {
        let f = ArgumentationFramework::from_names(&["a"], &[]).unwrap();
        assert_eq!(serialize(&f, Format::Apx), "arg(a).\n");
        let expected: String = RUNNING_APX.lines().skip(1).map(|l| format!("{l}\n")).collect();
        assert_eq!(serialize(&running_example(), Format::Apx), expected);
        assert_eq!(
            serialize(&running_example(), Format::Tgf),
            "A\nB\nC\nD\nE\n#\nA B\nC B\nC D\nD C\nD E\n"
        );
    }

    #[test]
    fn format_from_path() {
        assert_eq!(Format::from_path(Path::new("x/y.TGF")), Format::Tgf);
        assert_eq!(Format::from_path(Path::new("x/y.apx")), Format::Apx);
        assert_eq!(Format::from_path(Path::new("noext")), Format::Apx);
    }
}
