//! Group-spec expressions: `atom ("x" atom)*` with atoms `Cn`, `Dn`, `Sn`,
//! `An`, `Q8` and `@path`. `x` is a left-associative direct product and atom
//! letters are case-insensitive. A file atom takes the rest of the
//! expression as its path, so it can only appear last.

use std::fmt;
use std::path::PathBuf;

use crate::{io, Error, Group, Limits, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Cyclic(usize),
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion,
    File(PathBuf),
}

impl Atom {
    pub fn build(&self, limits: &Limits) -> Result<Group> {
        match self {
            Atom::Cyclic(n) => Group::cyclic(*n, limits),
            Atom::Dihedral(n) => Group::dihedral(*n, limits),
            Atom::Symmetric(n) => Group::symmetric(*n, limits),
            Atom::Alternating(n) => Group::alternating(*n, limits),
            Atom::Quaternion => Group::quaternion(limits),
            Atom::File(path) => io::load_group_file(path, limits),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Cyclic(n) => write!(f, "C{n}"),
            Atom::Dihedral(n) => write!(f, "D{n}"),
            Atom::Symmetric(n) => write!(f, "S{n}"),
            Atom::Alternating(n) => write!(f, "A{n}"),
            Atom::Quaternion => write!(f, "Q8"),
            Atom::File(p) => write!(f, "@{}", p.display()),
        }
    }
}

/// A parsed group expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    expression: String,
    atoms: Vec<Atom>,
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        Parser { text, pos: 0 }.parse()
    }

    pub fn expression(&self) -> &str {
        &self.expression
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Builds the group, folding products left to right.
    pub fn build(&self, limits: &Limits) -> Result<Group> {
        let mut atoms = self.atoms.iter();
        let first = atoms.next().expect("parser guarantees one atom").build(limits)?;
        atoms.try_fold(first, |acc, atom| Group::direct_product(&acc, &atom.build(limits)?, limits))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::parse(s)
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, position: usize, message: impl Into<String>) -> Error {
        Error::Spec {
            expr: self.text.to_string(),
            position: position + 1,
            message: message.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn parse(mut self) -> Result<GroupSpec> {
        let mut atoms = Vec::new();
        self.skip_ws();
        if self.rest().is_empty() {
            return Err(self.error(0, "empty group spec"));
        }
        loop {
            self.skip_ws();
            let atom = self.atom()?;
            let is_file = matches!(atom, Atom::File(_));
            atoms.push(atom);
            if is_file {
                break;
            }
            self.skip_ws();
            match self.rest().chars().next() {
                None => break,
                Some('x' | 'X') => self.pos += 1,
                Some(c) => return Err(self.error(self.pos, format!("expected 'x' between factors, found {c:?}"))),
            }
        }
        Ok(GroupSpec {
            expression: self.text.to_string(),
            atoms,
        })
    }

    fn atom(&mut self) -> Result<Atom> {
        let start = self.pos;
        let Some(head) = self.rest().chars().next() else {
            return Err(self.error(start, "expected a factor after 'x'"));
        };
        self.pos += head.len_utf8();
        if head == '@' {
            let path = self.rest().trim();
            if path.is_empty() {
                return Err(self.error(start, "empty file path after '@'"));
            }
            self.pos = self.text.len();
            return Ok(Atom::File(PathBuf::from(path)));
        }
        let digits_start = self.pos;
        let digits = self.rest().chars().take_while(char::is_ascii_digit).count();
        self.pos += digits;
        let number = &self.text[digits_start..self.pos];
        let make: fn(usize) -> Atom = match head.to_ascii_uppercase() {
            'C' => Atom::Cyclic,
            'D' => Atom::Dihedral,
            'S' => Atom::Symmetric,
            'A' => Atom::Alternating,
            'Q' if number == "8" => return Ok(Atom::Quaternion),
            'Q' => return Err(self.error(start, "only Q8 is a named quaternion group")),
            _ => return Err(self.error(start, format!("unknown atom starting with {head:?}"))),
        };
        if number.is_empty() {
            return Err(self.error(digits_start, format!("expected an integer after {head:?}")));
        }
        let n: usize = number
            .parse()
            .map_err(|_| self.error(digits_start, format!("malformed integer {number:?}")))?;
        Ok(make(n))
    }
}
