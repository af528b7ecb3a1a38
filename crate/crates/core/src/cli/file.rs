//! Presentation files: `[section]` headers, `key = value` lines, `#` comments.
//!
//! ```text
//! [group]
//! names = g, h
//! g = 1, 0
//! [eta]
//! values = 1, 3
//! [xi]
//! mode = b
//! [generators]
//! a1 = skew(g, 1)
//! a2 = skew(g, 1)
//! [params]
//! lambda = 0
//! [relations]
//! @lifting jordanian
//! ```
//!
//! Group relations (inverse pairs, commutation) are implied by `[group]`.
//! `@lifting KIND` adds the conjugation relations read off `[eta]`/`[xi]`
//! (`ζ = η` for mode `b`, `ζ = 0` for mode `a`) and the top relation of
//! kind `jordanian`, `diagonal` or `none`, with `λ` taken from `lambda`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::families::{make_lifting, Action, AlgebraPresentation, LiftingSpec, TopRelation};
use crate::groupdata::{validate_yd_triple, Character, GroupSpec, TripleKind, TwistedDerivation, XiMap, YDTriple};
use crate::ncpoly::{Alphabet, Letter, NCPolynomial, Word};
use crate::scalar::{parse_scalar, Scalar};

use super::expr::{parse_expr_with, ParseError};

const SECTIONS: &[&str] = &["group", "character", "eta", "xi", "generators", "precedence", "params", "relations"];

#[derive(Clone, Debug)]
struct Line {
    no: usize,
    /// Column of the first character of `text`.
    col: usize,
    text: String,
}

fn err(line: &Line, msg: impl Into<String>) -> ParseError {
    ParseError { line: line.no, col: line.col, msg: msg.into() }
}

fn split_sections(src: &str) -> Result<BTreeMap<String, Vec<Line>>, ParseError> {
    let mut out: BTreeMap<String, Vec<Line>> = BTreeMap::new();
    let mut current: Option<String> = None;
    for (i, raw) in src.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let col = body.len() - body.trim_start().len() + 1;
        let line = Line { no: i + 1, col, text: trimmed.to_string() };
        if let Some(name) = trimmed.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let name = name.trim().to_string();
            if !SECTIONS.contains(&name.as_str()) {
                return Err(err(&line, format!("unknown section `[{name}]`")));
            }
            if out.contains_key(&name) {
                return Err(err(&line, format!("section `[{name}]` repeated")));
            }
            out.insert(name.clone(), Vec::new());
            current = Some(name);
            continue;
        }
        match &current {
            Some(s) => out.get_mut(s).expect("inserted").push(line),
            None => return Err(err(&line, "content before the first section")),
        }
    }
    Ok(out)
}

/// `key = value` pairs, keys unique.
fn key_values(lines: &[Line]) -> Result<Vec<(String, String, Line)>, ParseError> {
    let mut seen = Vec::new();
    let mut out = Vec::new();
    for l in lines {
        let (k, v) = l.text.split_once('=').ok_or_else(|| err(l, "expected `key = value`"))?;
        let k = k.trim().to_string();
        if seen.contains(&k) {
            return Err(err(l, format!("key `{k}` repeated")));
        }
        seen.push(k.clone());
        out.push((k, v.trim().to_string(), l.clone()));
    }
    Ok(out)
}

fn lookup<'a>(kv: &'a [(String, String, Line)], key: &str) -> Option<&'a (String, String, Line)> {
    kv.iter().find(|(k, _, _)| k == key)
}

fn scalars(v: &str, l: &Line) -> Result<Vec<Scalar>, ParseError> {
    v.split(',').map(|s| parse_scalar(s).ok_or_else(|| err(l, format!("bad rational `{}`", s.trim())))).collect()
}

fn integers(v: &str, l: &Line) -> Result<Vec<i64>, ParseError> {
    v.split(',').map(|s| s.trim().parse().map_err(|_| err(l, format!("bad integer `{}`", s.trim())))).collect()
}

fn only_keys(kv: &[(String, String, Line)], allowed: &[&str]) -> Result<(), ParseError> {
    for (k, _, l) in kv {
        if !allowed.contains(&k.as_str()) {
            return Err(err(l, format!("unknown key `{k}`")));
        }
    }
    Ok(())
}

struct GroupSection {
    /// `None` for a presentation without group letters.
    spec: Option<GroupSpec>,
    chi: Character,
    eta: Option<TwistedDerivation>,
    xi_mode_b: bool,
    xi_values: Option<Vec<Scalar>>,
}

fn group_section(sections: &BTreeMap<String, Vec<Line>>) -> Result<GroupSection, ParseError> {
    let first = |s: &str| sections.get(s).and_then(|ls| ls.first()).cloned().unwrap_or(Line { no: 1, col: 1, text: String::new() });
    let kv = key_values(sections.get("group").map_or(&[][..], Vec::as_slice))?;
    only_keys(&kv, &["rank", "names", "g"])?;
    let names: Option<Vec<String>> =
        lookup(&kv, "names").map(|(_, v, _)| v.split(',').map(|s| s.trim().to_string()).collect());
    let rank = match (lookup(&kv, "rank"), &names) {
        (Some((_, v, l)), names) => {
            let r: usize = v.parse().map_err(|_| err(l, "rank must be a nonnegative integer"))?;
            if names.as_ref().is_some_and(|n| n.len() != r) {
                return Err(err(l, "rank does not match the number of names"));
            }
            r
        }
        (None, Some(n)) => n.len(),
        (None, None) => 0,
    };
    let spec = if rank == 0 {
        None
    } else {
        let names = names.unwrap_or_else(|| GroupSpec::standard(rank).expect("rank > 0").names().to_vec());
        let g = match lookup(&kv, "g") {
            Some((_, v, l)) => integers(v, l)?,
            None => (0..rank).map(|i| i64::from(i == 0)).collect(),
        };
        Some(GroupSpec::new(names, g).map_err(|e| err(&first("group"), e.to_string()))?)
    };

    let ckv = key_values(sections.get("character").map_or(&[][..], Vec::as_slice))?;
    only_keys(&ckv, &["values"])?;
    let chi = match lookup(&ckv, "values") {
        Some((_, v, l)) => Character::new(scalars(v, l)?).map_err(|e| err(l, e.to_string()))?,
        None => Character::trivial(rank),
    };
    let ekv = key_values(sections.get("eta").map_or(&[][..], Vec::as_slice))?;
    only_keys(&ekv, &["values"])?;
    let eta = match lookup(&ekv, "values") {
        Some((_, v, l)) => Some(TwistedDerivation::new(chi.clone(), scalars(v, l)?).map_err(|e| err(l, e.to_string()))?),
        None => None,
    };
    let xkv = key_values(sections.get("xi").map_or(&[][..], Vec::as_slice))?;
    only_keys(&xkv, &["mode", "values"])?;
    let xi_mode_b = match lookup(&xkv, "mode") {
        Some((_, v, _)) if v == "b" => true,
        Some((_, v, _)) if v == "a" => false,
        Some((_, v, l)) => return Err(err(l, format!("xi mode must be `a` or `b`, got `{v}`"))),
        None => true,
    };
    let xi_values = match lookup(&xkv, "values") {
        Some((_, v, l)) => Some(scalars(v, l)?),
        None => None,
    };
    Ok(GroupSection { spec, chi, eta, xi_mode_b, xi_values })
}

/// Parses a presentation file.
pub fn parse_presentation(src: &str, name: &str) -> Result<AlgebraPresentation, ParseError> {
    let sections = split_sections(src)?;
    let gs = group_section(&sections)?;
    let empty = Vec::new();
    let params_kv = key_values(sections.get("params").unwrap_or(&empty))?;
    let mut params = BTreeMap::new();
    for (k, v, l) in &params_kv {
        params.insert(k.clone(), parse_scalar(v).ok_or_else(|| err(l, format!("bad rational `{v}`")))?);
    }
    let rel_lines = sections.get("relations").unwrap_or(&empty);
    let directive: Vec<&Line> = rel_lines.iter().filter(|l| l.text.starts_with('@')).collect();
    let gen_kv = key_values(sections.get("generators").unwrap_or(&empty))?;

    let mut p = if let Some(d) = directive.first() {
        if directive.len() > 1 {
            return Err(err(directive[1], "only one `@lifting` directive allowed"));
        }
        lifting_from_directive(d, &gs, &gen_kv, &params, name)?
    } else {
        free_from_generators(&gs, &gen_kv, &params, name)?
    };

    for l in rel_lines.iter().filter(|l| !l.text.starts_with('@')) {
        let r = parse_expr_with(&l.text, &p.alphabet, &params, l.no, l.col)?;
        p.relations.push(r);
    }
    if let Some(ls) = sections.get("precedence") {
        let text: Vec<&str> = ls.iter().map(|l| l.text.as_str()).collect();
        let joined = text.join(" ");
        let first = &ls[0];
        let mut prec = Vec::new();
        for tok in joined.split('>') {
            let tok = tok.trim();
            let l = p.alphabet.get(tok).ok_or_else(|| err(first, format!("unknown letter `{tok}` in precedence")))?;
            if prec.contains(&l) {
                return Err(err(first, format!("letter `{tok}` listed twice in precedence")));
            }
            prec.push(l);
        }
        if prec.len() != p.alphabet.len() {
            return Err(err(first, "precedence must list every letter exactly once"));
        }
        p.precedence = prec;
    }
    Ok(p)
}

fn group_word_value(v: &str, alphabet: &Alphabet, l: &Line) -> Result<Word, ParseError> {
    let poly = parse_expr_with(v, alphabet, &BTreeMap::new(), l.no, l.col)?;
    let mut terms = poly.terms();
    match (terms.next(), terms.next()) {
        (Some((w, c)), None) if num_traits::One::is_one(c) && w.letters().iter().all(|&x| alphabet.is_group(x)) => {
            Ok(w.clone())
        }
        _ => Err(err(l, format!("`{v}` is not a group word"))),
    }
}

/// `skew(L, R)` with `L`, `R` group words.
fn parse_role(v: &str, alphabet: &Alphabet, l: &Line) -> Result<(Word, Word), ParseError> {
    let inner = v
        .strip_prefix("skew(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| err(l, format!("expected `skew(L, R)`, got `{v}`")))?;
    let (left, right) = inner.split_once(',').ok_or_else(|| err(l, "expected two group words"))?;
    Ok((group_word_value(left, alphabet, l)?, group_word_value(right, alphabet, l)?))
}

fn group_alphabet(spec: Option<&GroupSpec>) -> Result<(Alphabet, Vec<(Letter, Letter)>), String> {
    let mut a = Alphabet::new();
    let mut pairs = Vec::new();
    for n in spec.map_or(&[][..], GroupSpec::names) {
        pairs.push(a.add_group_gen(n).map_err(|e| e.to_string())?);
    }
    Ok((a, pairs))
}

fn g_word(spec: Option<&GroupSpec>, pairs: &[(Letter, Letter)]) -> Option<Word> {
    let spec = spec?;
    let mut ls = Vec::new();
    for (&(x, xi), &e) in pairs.iter().zip(spec.g()) {
        ls.extend(std::iter::repeat_n(if e >= 0 { x } else { xi }, e.unsigned_abs() as usize));
    }
    Some(Word::new(ls))
}

fn free_from_generators(
    gs: &GroupSection,
    gen_kv: &[(String, String, Line)],
    params: &BTreeMap<String, Scalar>,
    name: &str,
) -> Result<AlgebraPresentation, ParseError> {
    let first = gen_kv.first().map(|x| x.2.clone()).unwrap_or(Line { no: 1, col: 1, text: String::new() });
    let (mut alphabet, group) = group_alphabet(gs.spec.as_ref()).map_err(|m| err(&first, m))?;
    let g = g_word(gs.spec.as_ref(), &group);
    let mut skew = Vec::new();
    let mut skew_basis = Vec::new();
    for (k, v, l) in gen_kv {
        let (left, right) = parse_role(v, &alphabet, l)?;
        let tagged = Some(&left) == g.as_ref() && right.is_empty();
        let letter = alphabet.add_skew(k, left, right).map_err(|e| err(l, e.to_string()))?;
        skew.push(letter);
        if tagged {
            skew_basis.push(letter);
        }
    }
    let unit = NCPolynomial::one();
    let mut relations = Vec::new();
    for &(x, xi) in &group {
        relations.push(&NCPolynomial::monomial(&[x, xi]) - &unit);
        relations.push(&NCPolynomial::monomial(&[xi, x]) - &unit);
    }
    for i in 0..group.len() {
        for j in i + 1..group.len() {
            for u in [group[i].0, group[i].1] {
                for v in [group[j].0, group[j].1] {
                    relations.push(&NCPolynomial::monomial(&[u, v]) - &NCPolynomial::monomial(&[v, u]));
                }
            }
        }
    }
    let mut precedence: Vec<Letter> = group.iter().flat_map(|p| [p.0, p.1]).collect();
    precedence.extend(skew.iter().rev());
    Ok(AlgebraPresentation {
        name: name.to_string(),
        alphabet,
        relations,
        precedence,
        params: params.clone(),
        provenance: "presentation file".into(),
        group,
        g,
        skew_basis,
    })
}

fn lifting_from_directive(
    d: &Line,
    gs: &GroupSection,
    gen_kv: &[(String, String, Line)],
    params: &BTreeMap<String, Scalar>,
    name: &str,
) -> Result<AlgebraPresentation, ParseError> {
    let kind = d.text.strip_prefix("@lifting").ok_or_else(|| err(d, "unknown directive"))?.trim();
    let lambda = params.get("lambda").cloned().unwrap_or_else(Scalar::zero);
    let top = match kind {
        "jordanian" => TopRelation::Jordanian { lambda },
        "diagonal" => TopRelation::Diagonal { lambda },
        "none" | "" => TopRelation::None,
        other => return Err(err(d, format!("unknown lifting kind `{other}`"))),
    };
    let spec = gs.spec.as_ref().ok_or_else(|| err(d, "`@lifting` needs a [group] section"))?;
    let rank = spec.rank();
    let eta = gs.eta.clone().unwrap_or_else(|| {
        TwistedDerivation::additive(spec.g().iter().map(|&e| Scalar::from_integer(e.into())).collect())
    });
    let triple = YDTriple::new(spec.clone(), eta.clone()).map_err(|e| err(d, e.to_string()))?;
    if let TripleKind::Invalid(why) = validate_yd_triple(&triple) {
        return Err(err(d, format!("invalid YD-triple: {why}")));
    }
    if !gs.chi.is_trivial() {
        return Err(err(d, "liftings here need the trivial character"));
    }
    let xi_values = match &gs.xi_values {
        Some(v) if v.len() == rank => v.clone(),
        Some(v) => return Err(err(d, format!("xi has {} values for rank {rank}", v.len()))),
        None if gs.xi_mode_b => XiMap::case_b_canonical(eta.clone()).values().to_vec(),
        None => vec![Scalar::zero(); rank],
    };
    let actions = eta
        .values()
        .iter()
        .zip(&xi_values)
        .map(|(e, x)| Action::new(if gs.xi_mode_b { e.clone() } else { Scalar::zero() }, e.clone(), x.clone()))
        .collect();
    let mut skew_names = Vec::new();
    let (group_alpha, pairs) = group_alphabet(Some(spec)).map_err(|m| err(d, m))?;
    let g = g_word(Some(spec), &pairs);
    for (k, v, l) in gen_kv {
        let (left, right) = parse_role(v, &group_alpha, l)?;
        if Some(&left) != g.as_ref() || !right.is_empty() {
            return Err(err(l, "`@lifting` generators must be skew(g, 1)"));
        }
        skew_names.push(k.clone());
    }
    make_lifting(&LiftingSpec {
        name: name.to_string(),
        group: spec.clone(),
        skew_names,
        action: Some(actions),
        top,
        params: params.clone(),
        provenance: format!("presentation file, @lifting {kind}"),
    })
    .map_err(|e| err(d, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_ujor_lambda, make_wujor};
    use crate::scalar::int;

    const U: &str = "\
# u
[group]
names = g
[generators]
a1 = skew(g, 1)
a2 = skew(g, 1)
[params]
lambda = 0
[relations]
@lifting jordanian
";

    #[test]
    fn lifting_directive_matches_constructor() {
        let p = parse_presentation(U, "u").unwrap();
        let q = make_ujor_lambda(int(0));
        assert_eq!(p.system().unwrap().rules(), q.system().unwrap().rules());
    }

    #[test]
    fn hand_written_relations() {
        let src = "\
[group]
rank = 1
[generators]
a1 = skew(g, 1)
a2 = skew(g, 1)
[precedence]
g > g_inv > a2 > a1
[relations]
g a1 - a1 g - g + g^2
g a2 - a2 g - a1 g
g_inv a1 - a1 g_inv - 1 + g_inv
g_inv a2 - a2 g_inv + a1 g_inv - g_inv + 1
";
        let p = parse_presentation(src, "wujor").unwrap();
        let (s, _) = p.completed(6).unwrap();
        let (t, _) = make_wujor().completed(6).unwrap();
        assert_eq!(s.rules().len(), t.rules().len());
        for r in t.rules() {
            let e = s.normal_form(&NCPolynomial::word(r.lead.clone())).unwrap();
            assert_eq!(e, r.rhs);
        }
    }

    #[test]
    fn params_usable_in_relations() {
        let src = "[group]\nrank = 1\n[generators]\na = skew(g, 1)\n[params]\nc = 3/2\n[relations]\ng a g_inv - a - c (1 - g)\n";
        let p = parse_presentation(src, "x").unwrap();
        assert_eq!(p.relations.len(), 3);
        assert!(p.counit_violations().unwrap().is_empty());
        assert_eq!(p.skew_basis.len(), 1);
    }

    #[test]
    fn errors_have_positions() {
        let e = parse_presentation("[group]\nrank = 1\n[bogus]\n", "x").unwrap_err();
        assert_eq!((e.line, e.col), (3, 1));
        let e = parse_presentation("[group]\nrank = 1\n[relations]\n  g g_inv - 1 + h\n", "x").unwrap_err();
        assert_eq!((e.line, e.col), (4, 17));
        let e = parse_presentation("[generators]\na = skew(q, 1)\n", "x").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_presentation("[group]\nrank = 1\n[precedence]\ng > g_inv\n[generators]\na = skew(g,1)\n", "x").unwrap_err();
        assert!(e.msg.contains("every letter"));
        assert!(parse_presentation("a = 1\n", "x").is_err());
        assert!(parse_presentation("[group]\nrank = 2\nnames = g\n", "x").is_err());
    }
}
