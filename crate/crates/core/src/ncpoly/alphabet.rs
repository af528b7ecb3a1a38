use std::collections::HashMap;
use std::fmt;

use super::word::Word;
use super::NcError;

/// Index of a letter inside its [`Alphabet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub u16);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Hopf role of a generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Role {
    /// Group-like generator; `inverse` is its paired inverse letter.
    GroupGen { inverse: Letter },
    /// The formal inverse of a group-like generator.
    GroupGenInverse { of: Letter },
    /// `(left, right)`-skew-primitive: `Δ(a) = a ⊗ right + left ⊗ a`.
    SkewPrimitive { left: Word, right: Word },
}

impl Role {
    pub fn is_group(&self) -> bool {
        !matches!(self, Role::SkewPrimitive { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterInfo {
    pub name: String,
    pub role: Role,
}

/// Typed generator set of a free algebra: names plus Hopf roles.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<LetterInfo>,
    by_name: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.letters.len()).map(|i| Letter(i as u16))
    }

    fn push(&mut self, name: &str, role: Role) -> Result<Letter, NcError> {
        if self.by_name.contains_key(name) {
            return Err(NcError::DuplicateLetter(name.to_string()));
        }
        let id = Letter(self.letters.len() as u16);
        self.letters.push(LetterInfo { name: name.to_string(), role });
        self.by_name.insert(name.to_string(), id);
        Ok(id)
    }

    /// Adds a group-like generator `name` together with `name_inv`.
    pub fn add_group_gen(&mut self, name: &str) -> Result<(Letter, Letter), NcError> {
        let gen = Letter(self.letters.len() as u16);
        let inv = Letter(gen.0 + 1);
        self.push(name, Role::GroupGen { inverse: inv })?;
        self.push(&format!("{name}_inv"), Role::GroupGenInverse { of: gen })?;
        Ok((gen, inv))
    }

    /// Adds a `(left, right)`-skew-primitive generator.
    pub fn add_skew(&mut self, name: &str, left: Word, right: Word) -> Result<Letter, NcError> {
        for l in left.letters().iter().chain(right.letters()) {
            match self.letters.get(l.index()) {
                Some(info) if info.role.is_group() => {}
                _ => return Err(NcError::NonGroupTag(name.to_string())),
            }
        }
        self.push(name, Role::SkewPrimitive { left, right })
    }

    pub fn get(&self, name: &str) -> Option<Letter> {
        self.by_name.get(name).copied()
    }

    pub fn lookup(&self, name: &str) -> Result<Letter, NcError> {
        self.get(name).ok_or_else(|| NcError::UnknownLetter(name.to_string()))
    }

    pub fn name(&self, l: Letter) -> &str {
        self.letters.get(l.index()).map(|i| i.name.as_str()).unwrap_or("?")
    }

    pub fn role(&self, l: Letter) -> Result<&Role, NcError> {
        self.letters.get(l.index()).map(|i| &i.role).ok_or(NcError::MissingRole(l))
    }

    pub fn is_group(&self, l: Letter) -> bool {
        self.role(l).map(Role::is_group).unwrap_or(false)
    }

    /// Inverse letter of a group letter.
    pub fn inverse(&self, l: Letter) -> Result<Letter, NcError> {
        match self.role(l)? {
            Role::GroupGen { inverse } => Ok(*inverse),
            Role::GroupGenInverse { of } => Ok(*of),
            Role::SkewPrimitive { .. } => Err(NcError::MissingInverse(l)),
        }
    }

    /// Inverse of a word made of group letters.
    pub fn inverse_word(&self, w: &Word) -> Result<Word, NcError> {
        w.letters().iter().rev().map(|&l| self.inverse(l)).collect::<Result<Vec<_>, _>>().map(Word::new)
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.letters().iter().map(|&l| self.name(l)).collect::<Vec<_>>().join(" ")
    }

    /// Group generators (not inverses), in insertion order.
    pub fn group_gens(&self) -> Vec<Letter> {
        self.letters()
            .filter(|&l| matches!(self.role(l), Ok(Role::GroupGen { .. })))
            .collect()
    }

    pub fn skew_letters(&self) -> Vec<Letter> {
        self.letters().filter(|&l| !self.is_group(l)).collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self.letters.iter().map(|i| i.name.as_str()).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_pair_up() {
        let mut a = Alphabet::new();
        let (g, gi) = a.add_group_gen("g").unwrap();
        assert_eq!(a.inverse(g).unwrap(), gi);
        assert_eq!(a.inverse(gi).unwrap(), g);
        assert_eq!(a.name(gi), "g_inv");
        let a1 = a.add_skew("a1", Word::new(vec![g]), Word::one()).unwrap();
        assert!(matches!(a.inverse(a1), Err(NcError::MissingInverse(_))));
        assert_eq!(a.inverse_word(&Word::new(vec![g, g, gi])).unwrap(), Word::new(vec![g, gi, gi]));
    }

    #[test]
    fn skew_tags_must_be_group_words() {
        let mut a = Alphabet::new();
        a.add_group_gen("g").unwrap();
        let x = a.add_skew("x", Word::one(), Word::one()).unwrap();
        assert!(matches!(a.add_skew("y", Word::new(vec![x]), Word::one()), Err(NcError::NonGroupTag(_))));
        assert!(matches!(a.add_group_gen("g"), Err(NcError::DuplicateLetter(_))));
    }
}
