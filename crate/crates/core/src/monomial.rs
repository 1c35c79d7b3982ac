//! Monomials, multidegrees, minimal generating sets, and the
//! facet-ideal / facet-complex correspondence.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// A monomial as a sparse exponent vector over variable ids. Stored
/// exponents are always positive; the identity monomial is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exponents: BTreeMap<usize, u32>,
}

/// An `N^n`-degree is carried by the same data as a monomial.
pub type Multidegree = Monomial;

impl Monomial {
    /// The monomial 1.
    pub fn identity() -> Self {
        Monomial::default()
    }

    /// Builds a monomial from (variable id, exponent) pairs. Exponents add
    /// up on repeats; zero exponents are dropped.
    pub fn from_exponents<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut exponents = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *exponents.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exponents }
    }

    /// A squarefree monomial with the given support.
    pub fn squarefree<I: IntoIterator<Item = usize>>(support: I) -> Self {
        Monomial {
            exponents: support.into_iter().map(|v| (v, 1)).collect(),
        }
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exponents.get(&var).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exponents.iter().map(|(&v, &e)| (v, e))
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.exponents.keys().copied().collect()
    }

    /// The standard degree: the sum of all exponents.
    pub fn degree(&self) -> usize {
        self.exponents.values().map(|&e| e as usize).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.values().all(|&e| e == 1)
    }

    /// Componentwise `<=`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .all(|(v, &e)| e <= other.exponent(*v))
    }

    /// Divides and is distinct.
    pub fn strictly_divides(&self, other: &Monomial) -> bool {
        self.divides(other) && self != other
    }

    /// Componentwise max.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (&v, &e) in &other.exponents {
            let cur = exponents.entry(v).or_insert(0);
            *cur = (*cur).max(e);
        }
        Monomial { exponents }
    }

    /// The lcm of a sequence of monomials; 1 for the empty sequence.
    pub fn lcm_all<'a, I: IntoIterator<Item = &'a Monomial>>(ms: I) -> Monomial {
        ms.into_iter()
            .fold(Monomial::identity(), |acc, m| acc.lcm(m))
    }
}

/// A monomial ideal given by its minimal generators over an interned
/// variable table. Construction enforces minimality: no generator divides
/// another and there are no duplicates.
#[derive(Clone, Debug)]
pub struct MonomialIdeal {
    variables: Vec<String>,
    generators: Vec<Monomial>,
}

/// Ideals compare by their generator sequences as name -> exponent maps;
/// variable id assignment is ignored.
impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.generators.len() == other.generators.len()
            && (0..self.generators.len()).all(|i| self.named_generator(i) == other.named_generator(i))
    }
}

impl Eq for MonomialIdeal {}

impl MonomialIdeal {
    /// The zero ideal.
    pub fn zero() -> Self {
        MonomialIdeal {
            variables: Vec::new(),
            generators: Vec::new(),
        }
    }

    /// Minimalizes a raw generating set: removes duplicates and every
    /// generator divisible by a distinct one, preserving first-appearance
    /// order of the survivors. The variable table is compacted to the
    /// variables that actually occur.
    pub fn minimalize(variables: Vec<String>, gens: Vec<Monomial>) -> Self {
        let mut kept: Vec<Monomial> = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            let duplicate_later_copy = gens[..i].contains(g);
            let properly_divisible = gens.iter().any(|h| h.strictly_divides(g));
            if !duplicate_later_copy && !properly_divisible {
                kept.push(g.clone());
            }
        }

        let used: BTreeSet<usize> = kept.iter().flat_map(|g| g.support()).collect();
        let mut remap: BTreeMap<usize, usize> = BTreeMap::new();
        let mut table = Vec::with_capacity(used.len());
        for &old in &used {
            remap.insert(old, table.len());
            table.push(variables[old].clone());
        }
        let generators = kept
            .into_iter()
            .map(|g| Monomial::from_exponents(g.exponents().map(|(v, e)| (remap[&v], e))))
            .collect();
        MonomialIdeal {
            variables: table,
            generators,
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn var_name(&self, v: usize) -> &str {
        &self.variables[v]
    }

    pub fn var_id(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|n| n == name)
    }

    fn named_generator(&self, i: usize) -> BTreeMap<&str, u32> {
        self.generators[i]
            .exponents()
            .map(|(v, e)| (self.variables[v].as_str(), e))
            .collect()
    }

    /// A monomial over this ideal's variable table, by variable names.
    /// Returns `None` if a name is unknown.
    pub fn monomial_from_names(&self, pairs: &[(&str, u32)]) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(pairs.len());
        for &(name, e) in pairs {
            exps.push((self.var_id(name)?, e));
        }
        Some(Monomial::from_exponents(exps))
    }

    /// The lcm of all generators; 1 for the zero ideal.
    pub fn lcm_of_generators(&self) -> Monomial {
        Monomial::lcm_all(&self.generators)
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// Renders a monomial over this ideal's variable table, factors sorted
    /// by variable name. Squarefree monomials in single-letter variables
    /// are juxtaposed (`abe`); anything else uses explicit factors
    /// (`x1^2*x3`).
    pub fn monomial_to_string(&self, m: &Monomial) -> String {
        if m.is_identity() {
            return "1".to_string();
        }
        let mut factors: Vec<(&str, u32)> = m
            .exponents()
            .map(|(v, e)| (self.variables[v].as_str(), e))
            .collect();
        factors.sort();
        let juxtapose = m.is_squarefree() && factors.iter().all(|(name, _)| name.len() == 1);
        if juxtapose {
            factors.iter().map(|(name, _)| *name).collect()
        } else {
            factors
                .iter()
                .map(|(name, e)| {
                    if *e == 1 {
                        name.to_string()
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    /// Parses the ideal text format: one generator per line, factors like
    /// `x1`, `x1^2`, optionally `*`-separated; juxtaposed single-letter
    /// variables (`abe` = `a*b*e`) are accepted. `#` comments and blank
    /// lines are ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut variables: Vec<String> = Vec::new();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let mut gens: Vec<Monomial> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = match line.find('#') {
                Some(pos) => &line[..pos],
                None => line,
            };
            if line.trim().is_empty() {
                continue;
            }
            let factors = parse_factors(line, lineno + 1)?;
            let exps = factors.into_iter().map(|(name, e)| {
                let id = *index.entry(name.clone()).or_insert_with(|| {
                    variables.push(name);
                    variables.len() - 1
                });
                (id, e)
            });
            gens.push(Monomial::from_exponents(exps));
        }
        Ok(MonomialIdeal::minimalize(variables, gens))
    }

    /// Renders the ideal text format with explicit `*` separators;
    /// `parse_text` round-trips it.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for g in &self.generators {
            let factors: Vec<String> = g
                .exponents()
                .map(|(v, e)| {
                    if e == 1 {
                        self.variables[v].clone()
                    } else {
                        format!("{}^{e}", self.variables[v])
                    }
                })
                .collect();
            out.push_str(&factors.join("*"));
            out.push('\n');
        }
        out
    }

    /// The facet complex of a squarefree ideal: one facet per generator
    /// support. Inverse of [`facet_ideal`].
    pub fn facet_complex(&self) -> Result<SimplicialComplex> {
        for g in &self.generators {
            if !g.is_squarefree() {
                return Err(Error::NotSquarefree(self.monomial_to_string(g)));
            }
        }
        let raw: Vec<Vec<&str>> = self
            .generators
            .iter()
            .map(|g| {
                g.support()
                    .iter()
                    .map(|&v| self.variables[v].as_str())
                    .collect()
            })
            .collect();
        SimplicialComplex::from_named_facets(raw)
    }
}

/// The facet ideal of a complex: one squarefree generator per facet, the
/// product of its vertices. Minimal because facets are inclusion-maximal.
pub fn facet_ideal(g: &SimplicialComplex) -> MonomialIdeal {
    let variables = g.vertex_names().to_vec();
    let generators = g
        .facets()
        .iter()
        .map(|f| Monomial::squarefree(f.iter().copied()))
        .collect();
    // Facets are pairwise incomparable, so this is already minimal.
    MonomialIdeal {
        variables,
        generators,
    }
}

/// One parsed factor: variable name and exponent.
fn parse_factors(line: &str, lineno: usize) -> Result<Vec<(String, u32)>> {
    let err = |msg: String| Error::Parse { line: lineno, msg };
    let mut factors: Vec<(String, u32)> = Vec::new();
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    let mut expect_factor = true;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '*' {
            if expect_factor {
                return Err(err("unexpected `*`".to_string()));
            }
            expect_factor = true;
            i += 1;
        } else if c.is_ascii_alphabetic() {
            // Variable: letter followed by digits, optional ^exponent.
            let start = i;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            let mut exp = 1u32;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let dstart = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if dstart == i {
                    return Err(err("`^` must be followed by an exponent".to_string()));
                }
                let digits: String = chars[dstart..i].iter().collect();
                exp = digits
                    .parse::<u32>()
                    .map_err(|_| err(format!("bad exponent `{digits}`")))?;
                if exp == 0 {
                    return Err(err("exponents must be positive".to_string()));
                }
            }
            factors.push((name, exp));
            expect_factor = false;
        } else {
            return Err(err(format!("unexpected character `{c}`")));
        }
    }
    if factors.is_empty() {
        return Err(err("empty generator".to_string()));
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(lines: &str) -> MonomialIdeal {
        MonomialIdeal::parse_text(lines).unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        let i = ideal("x1*x2\nx1*x2*x3");
        assert_eq!(i.generators().len(), 1);
        assert_eq!(i.to_text(), "x1*x2\n");
    }

    #[test]
    fn minimalize_keeps_example_generators() {
        let i = ideal("ab\nae\nbe\ncd\nce\nde");
        assert_eq!(i.generators().len(), 6);
        assert_eq!(i.variables(), &["a", "b", "e", "c", "d"]);
    }

    #[test]
    fn minimalize_drops_higher_powers_and_is_idempotent() {
        let i = ideal("x^2\nx^3");
        assert_eq!(i.to_text(), "x^2\n");
        let again = MonomialIdeal::minimalize(i.variables().to_vec(), i.generators().to_vec());
        assert_eq!(again, i);
    }

    #[test]
    fn lcm_cases() {
        let i = ideal("x1*x2\nx1*x3");
        assert_eq!(i.monomial_to_string(&i.lcm_of_generators()), "x1*x2*x3");
        assert!(Monomial::lcm_all([]).is_identity());
        let ex = ideal("x1*x2\nx1*x3\nx1*x4\nx3*x4");
        assert_eq!(ex.lcm_of_generators().degree(), 4);
        assert_eq!(ex.monomial_to_string(&ex.lcm_of_generators()), "x1*x2*x3*x4");
    }

    #[test]
    fn facet_ideal_cases() {
        let g = SimplicialComplex::parse_text("1 2\n2 3").unwrap();
        let i = facet_ideal(&g);
        assert_eq!(i.to_text(), "1*2\n2*3\n");

        let six = SimplicialComplex::parse_text("a b\na e\nb e\nc d\nc e\nd e").unwrap();
        assert_eq!(facet_ideal(&six), ideal("ab\nae\nbe\ncd\nce\nde"));

        assert!(facet_ideal(&SimplicialComplex::empty()).is_zero());
    }

    #[test]
    fn facet_complex_cases() {
        let i = ideal("x1*x2\nx2*x3");
        let g = i.facet_complex().unwrap();
        assert_eq!(g, SimplicialComplex::parse_text("x1 x2\nx2 x3").unwrap());

        assert_eq!(
            ideal("x^2").facet_complex().unwrap_err(),
            Error::NotSquarefree("x^2".into())
        );

        let ex = ideal("x1*x2\nx1*x3\nx1*x4\nx3*x4");
        assert_eq!(ex.facet_complex().unwrap().facet_count(), 4);
    }

    #[test]
    fn round_trips() {
        let six = SimplicialComplex::parse_text("a b\na e\nb e\nc d\nc e\nd e").unwrap();
        assert_eq!(facet_ideal(&six).facet_complex().unwrap(), six);

        let i = ideal("x1*x2\nx2*x3\nx4");
        assert_eq!(facet_ideal(&i.facet_complex().unwrap()), i);
        assert_eq!(MonomialIdeal::parse_text(&i.to_text()).unwrap(), i);
    }

    #[test]
    fn divisibility() {
        let x1 = Monomial::from_exponents([(0, 1)]);
        let x1x2 = Monomial::from_exponents([(0, 1), (1, 1)]);
        let x1sq = Monomial::from_exponents([(0, 2)]);
        assert!(x1.divides(&x1x2));
        assert!(x1.strictly_divides(&x1x2));
        assert!(x1x2.divides(&x1x2));
        assert!(!x1x2.strictly_divides(&x1x2));
        assert!(!x1sq.divides(&x1));
    }

    #[test]
    fn parser_accepts_juxtaposition_and_powers() {
        let i = ideal("abe");
        assert_eq!(i.generators().len(), 1);
        assert_eq!(i.generators()[0].degree(), 3);

        let i = ideal("x1x2\nx1^2*x3");
        assert_eq!(i.variables(), &["x1", "x2", "x3"]);
        assert_eq!(i.generators()[1].exponent(0), 2);

        assert!(matches!(
            MonomialIdeal::parse_text("x^0").unwrap_err(),
            Error::Parse { .. }
        ));
        assert!(matches!(
            MonomialIdeal::parse_text("3x").unwrap_err(),
            Error::Parse { .. }
        ));
    }

    #[test]
    fn monomial_rendering() {
        let i = ideal("ab\ncd");
        let m = i.monomial_from_names(&[("a", 1), ("b", 1), ("c", 1)]).unwrap();
        assert_eq!(i.monomial_to_string(&m), "abc");
        assert_eq!(i.monomial_to_string(&Monomial::identity()), "1");

        let j = ideal("x1*x2");
        let m = j.monomial_from_names(&[("x1", 2), ("x2", 1)]).unwrap();
        assert_eq!(j.monomial_to_string(&m), "x1^2*x2");
    }

    #[test]
    fn top_grade_bounds_degree_of_generators() {
        let i = ideal("ab\nae\nbe\ncd\nce\nde");
        let top = i.lcm_of_generators().degree();
        assert_eq!(top, 5);
        for g in i.generators() {
            assert!(g.degree() <= top);
        }
    }
}
