//! Symbols `p→(q,r,s)` on four antipodal pairs and the action of `S4` on them.
//!
//! Labels are signed integers `±1..±4`. In the standard arrangement the
//! labels 1, 2, 3, 4 stand for `x, y, z, P`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::combinat::SignedBijection;
use crate::cycles::{all_cycle_invariants, CycleInvariantSet};
use crate::error::{Error, Result};
use crate::field::{OrderedField, Rational, Sign};
use crate::linalg::det_of_rows;
use crate::normal::{cycle_search, is_convex_positive_bijection, IsoWitness, NormalSystem};
use crate::sphere::{positive_combination, AntipodalArrangement};

/// `head → (triple)`: the head is a positive combination of the triple, and
/// the ordered triple has negative determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub head: i8,
    pub triple: [i8; 3],
}

impl Symbol {
    pub fn new(head: i8, triple: [i8; 3]) -> Result<Self> {
        let mut lines: Vec<i8> = std::iter::once(head).chain(triple).map(i8::abs).collect();
        lines.sort_unstable();
        if lines != [1, 2, 3, 4] {
            return Err(Error::Parse(format!(
                "symbol {head}->({},{},{}) must use each of the lines 1..4 once",
                triple[0], triple[1], triple[2]
            )));
        }
        Ok(Symbol { head, triple })
    }

    /// Negates every label.
    pub fn negated(&self) -> Symbol {
        Symbol {
            head: -self.head,
            triple: self.triple.map(|l| -l),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [q, r, s] = self.triple;
        write!(f, "{}->({q},{r},{s})", self.head)
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad symbol {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, rest) = t.split_once("->").ok_or_else(bad)?;
        let body = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let parts: Vec<i8> = body.split(',').map(|p| p.parse().map_err(|_| bad())).collect::<Result<_>>()?;
        let triple: [i8; 3] = parts.try_into().map_err(|_| bad())?;
        Symbol::new(head.parse().map_err(|_| bad())?, triple)
    }
}

/// The four generating transpositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    T12,
    T23,
    T34,
    T14,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::T12, Generator::T23, Generator::T34, Generator::T14];

    /// The transposition as a permutation of `0..4`.
    pub fn perm(self) -> [usize; 4] {
        match self {
            Generator::T12 => [1, 0, 2, 3],
            Generator::T23 => [0, 2, 1, 3],
            Generator::T34 => [0, 1, 3, 2],
            Generator::T14 => [3, 1, 2, 0],
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::T12 => "(12)",
            Generator::T23 => "(23)",
            Generator::T34 => "(34)",
            Generator::T14 => "(14)",
        })
    }
}

pub fn act(g: Generator, s: Symbol) -> Symbol {
    let p = s.head;
    let [q, r, t] = s.triple;
    match g {
        Generator::T12 => Symbol {
            head: -p,
            triple: [-r, -q, -t],
        },
        Generator::T23 => Symbol {
            head: r,
            triple: [-q, p, -t],
        },
        Generator::T34 => Symbol {
            head: t,
            triple: [-q, -r, p],
        },
        Generator::T14 => Symbol {
            head: -p,
            triple: [-t, -r, -q],
        },
    }
}

/// Applies the generators of `word` in order, first to last.
pub fn act_word(word: &[Generator], s: Symbol) -> Symbol {
    word.iter().fold(s, |acc, &g| act(g, acc))
}

/// All 384 symbols.
pub fn all_symbols() -> Vec<Symbol> {
    let mut out = Vec::with_capacity(384);
    for head in 1..=4i8 {
        for hs in [1i8, -1] {
            let rest: Vec<i8> = (1..=4).filter(|&l| l != head).collect();
            for perm in crate::combinat::permutations(3) {
                for mask in 0..8u8 {
                    let triple: [i8; 3] = std::array::from_fn(|i| rest[perm[i]] * if mask & (1 << i) != 0 { -1 } else { 1 });
                    out.push(Symbol { head: hs * head, triple });
                }
            }
        }
    }
    out
}

pub fn orbit(s: Symbol) -> BTreeSet<Symbol> {
    let mut seen = BTreeSet::from([s]);
    let mut stack = vec![s];
    while let Some(x) = stack.pop() {
        for g in Generator::ALL {
            let y = act(g, x);
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen
}

/// The partition of all symbols into orbits, ordered by smallest member.
pub fn orbits() -> Vec<BTreeSet<Symbol>> {
    let mut remaining: BTreeSet<Symbol> = all_symbols().into_iter().collect();
    let mut out = Vec::new();
    while let Some(&s) = remaining.iter().next() {
        let o = orbit(s);
        for x in &o {
            remaining.remove(x);
        }
        out.push(o);
    }
    out
}

fn compose4(a: [usize; 4], b: [usize; 4]) -> [usize; 4] {
    // a ∘ b: apply b first
    std::array::from_fn(|i| a[b[i]])
}

/// The 24 elements of `S4`, each with a shortest generator word.
pub fn group_words() -> Vec<([usize; 4], Vec<Generator>)> {
    let id = [0, 1, 2, 3];
    let mut words: HashMap<[usize; 4], Vec<Generator>> = HashMap::from([(id, Vec::new())]);
    let mut queue = VecDeque::from([id]);
    let mut order = vec![id];
    while let Some(p) = queue.pop_front() {
        for g in Generator::ALL {
            let next = compose4(g.perm(), p);
            if !words.contains_key(&next) {
                let mut w = words[&p].clone();
                w.push(g);
                words.insert(next, w);
                queue.push_back(next);
                order.push(next);
            }
        }
    }
    order.into_iter().map(|p| (p, words[&p].clone())).collect()
}

/// Whether acting by words factors through `S4`: for every element `σ`, every
/// generator `g` and every symbol, acting by the word of `g∘σ` equals acting
/// by `σ`'s word and then by `g`.
pub fn action_is_well_defined() -> bool {
    let words: HashMap<[usize; 4], Vec<Generator>> = group_words().into_iter().collect();
    let symbols = all_symbols();
    words.iter().all(|(p, w)| {
        Generator::ALL.iter().all(|&g| {
            let gw = &words[&compose4(g.perm(), *p)];
            symbols.iter().all(|&s| act_word(gw, s) == act(g, act_word(w, s)))
        })
    })
}

/// No non-identity element fixes any symbol.
pub fn action_is_free() -> bool {
    let symbols = all_symbols();
    group_words()
        .iter()
        .filter(|(p, _)| *p != [0, 1, 2, 3])
        .all(|(_, w)| symbols.iter().all(|&s| act_word(w, s) != s))
}

/// `x, y, z, P = (1,0,0), (0,1,0), (0,0,1), (1,1,1)`.
pub fn standard_arrangement() -> AntipodalArrangement<Rational> {
    let v = |a: i64, b: i64, c: i64| vec![Rational::from_i64(a), Rational::from_i64(b), Rational::from_i64(c)];
    AntipodalArrangement::new(2, vec![v(1, 0, 0), v(0, 1, 0), v(0, 0, 1), v(1, 1, 1)]).unwrap()
}

fn check_four<T: OrderedField>(arr: &AntipodalArrangement<T>) -> Result<Vec<Vec<T>>> {
    if arr.k() != 2 || arr.len() != 4 {
        return Err(Error::Invalid(format!(
            "symbols need 4 pairs on the 2-sphere, got {} on the {}-sphere",
            arr.len(),
            arr.k()
        )));
    }
    let sorted = arr.sorted_by_label();
    Ok(sorted.points().iter().map(|p| p.rep().to_vec()).collect())
}

fn instantiate<T: OrderedField>(reps: &[Vec<T>], l: i8) -> Vec<T> {
    let v = &reps[(l.unsigned_abs() - 1) as usize];
    if l > 0 {
        v.clone()
    } else {
        v.iter().map(|x| -x.clone()).collect()
    }
}

fn triple_det_sign<T: OrderedField>(reps: &[Vec<T>], s: &Symbol) -> Sign {
    let t: Vec<Vec<T>> = s.triple.iter().map(|&l| instantiate(reps, l)).collect();
    let rows: Vec<&[T]> = t.iter().map(Vec::as_slice).collect();
    det_of_rows(&rows).sign()
}

/// Symbols whose instantiated triple has negative determinant.
pub fn negative_symbols<T: OrderedField>(arr: &AntipodalArrangement<T>) -> Result<Vec<Symbol>> {
    let reps = check_four(arr)?;
    Ok(all_symbols()
        .into_iter()
        .filter(|s| triple_det_sign(&reps, s) == Sign::Negative)
        .collect())
}

/// Symbols realized by the arrangement.
pub fn compatible_symbols<T: OrderedField>(arr: &AntipodalArrangement<T>) -> Result<BTreeSet<Symbol>> {
    let reps = check_four(arr)?;
    let mut out = BTreeSet::new();
    for s in all_symbols() {
        if triple_det_sign(&reps, &s) != Sign::Negative {
            continue;
        }
        let t: Vec<Vec<T>> = s.triple.iter().map(|&l| instantiate(&reps, l)).collect();
        let basis: Vec<&[T]> = t.iter().map(Vec::as_slice).collect();
        if positive_combination(&instantiate(&reps, s.head), &basis)?.is_positive() {
            out.insert(s);
        }
    }
    Ok(out)
}

/// Signed bijections carrying the given line cycles onto those of the
/// standard arrangement.
pub fn match_to_standard(cycles: &CycleInvariantSet) -> Result<Vec<IsoWitness>> {
    let standard = all_cycle_invariants(&standard_arrangement())?;
    if cycles.len() != standard.len() {
        return Err(Error::Dimension(format!(
            "expected {} cycles, got {}",
            standard.len(),
            cycles.len()
        )));
    }
    let found = cycle_search(cycles, &standard, 4, 2);
    if found.is_empty() {
        return Err(Error::NoMatch("cycles do not match the standard arrangement".into()));
    }
    Ok(found)
}

/// All convex positive bijections of a 4-pair arrangement onto itself.
pub fn automorphisms<T: OrderedField>(arr: &AntipodalArrangement<T>) -> Result<Vec<SignedBijection>> {
    let ns = NormalSystem::new(3, check_four(arr)?)?;
    let mut out = Vec::new();
    for w in SignedBijection::all(4) {
        if is_convex_positive_bijection(&w, &ns, &ns)? {
            out.push(w);
        }
    }
    Ok(out)
}

/// Closure, identity and inverses.
pub fn is_group(elements: &[SignedBijection]) -> bool {
    let Some(first) = elements.first() else {
        return false;
    };
    let set: BTreeSet<&SignedBijection> = elements.iter().collect();
    set.contains(&SignedBijection::identity(first.len()))
        && elements.iter().all(|a| set.contains(&a.inverse()))
        && elements.iter().all(|a| elements.iter().all(|b| set.contains(&a.compose(b))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Symbol {
        t.parse().unwrap()
    }

    #[test]
    fn generator_formulas() {
        // P→(y,x,z) under (12)
        assert_eq!(act(Generator::T12, s("4->(2,1,3)")), s("-4->(-1,-2,-3)"));
        assert_eq!(act(Generator::T23, s("1->(2,3,4)")), s("3->(-2,1,-4)"));
        for g in Generator::ALL {
            for x in all_symbols() {
                assert_eq!(act(g, act(g, x)), x);
            }
        }
    }

    #[test]
    fn relations() {
        use Generator::*;
        for x in all_symbols() {
            assert_eq!(act_word(&[T12, T23, T12], x), act_word(&[T23, T12, T23], x));
            assert_eq!(act_word(&[T12, T34], x), act_word(&[T34, T12], x));
        }
        assert!(action_is_well_defined());
    }

    #[test]
    fn counting() {
        assert_eq!(all_symbols().len(), 384);
        assert_eq!(all_symbols().into_iter().collect::<BTreeSet<_>>().len(), 384);
        let o = orbits();
        assert_eq!(o.len(), 16);
        assert!(o.iter().all(|x| x.len() == 24));
        assert_eq!(group_words().len(), 24);
        assert!(action_is_free());
    }

    #[test]
    fn standard_compatible_orbit() {
        let a = standard_arrangement();
        let c = compatible_symbols(&a).unwrap();
        assert_eq!(c, orbit(s("4->(2,1,3)")));
        assert_eq!(negative_symbols(&a).unwrap().len(), 192);
    }

    #[test]
    fn standard_automorphisms() {
        let aut = automorphisms(&standard_arrangement()).unwrap();
        assert_eq!(aut.len(), 48);
        assert!(is_group(&aut));
        assert!(aut.contains(&SignedBijection::identity(4).negated()));
    }

    #[test]
    fn dictionary_matches_itself() {
        let a = standard_arrangement();
        let w = match_to_standard(&all_cycle_invariants(&a).unwrap()).unwrap();
        assert!(w.contains(&IsoWitness {
            map: SignedBijection::identity(4),
            flipped: false
        }));
        let flipped = all_cycle_invariants(&a.total_flip()).unwrap();
        let w = match_to_standard(&flipped).unwrap();
        assert!(w.contains(&IsoWitness {
            map: SignedBijection::identity(4),
            flipped: true
        }));
    }

    #[test]
    fn symbol_text() {
        assert_eq!(s(" -4 -> (-1, -2, -3)").to_string(), "-4->(-1,-2,-3)");
        assert!("4->(1,1,3)".parse::<Symbol>().is_err());
        assert!("4->(1,2)".parse::<Symbol>().is_err());
        assert!("4(1,2,3)".parse::<Symbol>().is_err());
    }
}
