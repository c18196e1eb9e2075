//! Finitely presented associative algebras over the rationals.
//!
//! A [`Presentation`] lists generators (some flagged central) and relation
//! polynomials. Dimension upper bounds come from linear algebra in the space
//! of words of length `≤ L`: the truncated ideal `I_L` is spanned by all
//! relation instances `u·r·v` of total length `≤ L`. A
//! [`ClosureCertificate`] records a word basis together with the left action
//! of every generator on it, reduced modulo `I_L`; since `I_L` lies in the
//! ideal, such a certificate proves `dim ≤ |basis|` and supplies a model of
//! the regular representation for zero tests.
//!
//! [`ClosureCertificate::refine`] then divides out whatever the relations
//! still force inside that model. The refined certificate carries a faithful
//! copy of the quotient, so its length is the exact dimension.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact::{
    fmt_rational, parse_rational, AlgebraElement, Echelon, Fp, Matrix, Rational, SparseRref, SparseVec,
};
use crate::{Error, Result};

/// A monomial, as a sequence of generator indices. Ordered by length, then
/// lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0.iter().map(|&g| names[g as usize].as_str()).collect::<Vec<_>>().join("*")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Noncommutative polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct NCPoly {
    terms: BTreeMap<Word, Rational>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        NCPoly::monomial(Word::empty(), c)
    }

    pub fn gen(i: usize) -> Self {
        NCPoly::monomial(Word(vec![i as u8]), Rational::one())
    }

    pub fn monomial(w: Word, c: Rational) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    /// Terms in increasing word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest word length, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    pub fn add_scalar(&self, c: &Rational) -> Self {
        let mut p = self.clone();
        p.add_term(Word::empty(), c.clone());
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(NCPoly::one(), |acc, _| &acc * self)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    /// Replaces generator `i` by `images[i]`.
    pub fn substitute(&self, images: &[NCPoly]) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            let mut prod = NCPoly::constant(c.clone());
            for &g in w.letters() {
                prod = &prod * &images[g as usize];
            }
            out = &out + &prod;
        }
        out
    }

    /// Evaluates at elements of a concrete algebra. `unit` fixes the ambient
    /// algebra, so that constants and the zero polynomial make sense.
    pub fn eval<E: AlgebraElement<Scalar = Rational>>(&self, images: &[E], unit: &E) -> E {
        let mut cache: HashMap<&[u8], E> = HashMap::new();
        let mut acc = unit.scale(&Rational::zero());
        for (w, c) in &self.terms {
            let letters = w.letters();
            let mut start = letters.len();
            while start > 0 && !cache.contains_key(&letters[..start]) {
                start -= 1;
            }
            let mut prod = if start == 0 { unit.clone() } else { cache[&letters[..start]].clone() };
            for k in start..letters.len() {
                prod = prod.mul(&images[letters[k] as usize]);
                cache.insert(&letters[..=k], prod.clone());
            }
            acc = acc.add(&prod.scale(c));
        }
        acc
    }

    /// `∏ (lin − r)` over the roots, expanded.
    pub fn root_product(lin: &NCPoly, roots: &[Rational]) -> NCPoly {
        roots.iter().fold(NCPoly::one(), |acc, r| &acc * &lin.add_scalar(&-r.clone()))
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (w, c) in self.terms.iter().rev() {
            let token = if w.is_empty() {
                fmt_rational(c)
            } else if c.is_one() {
                w.fmt_with(names)
            } else if *c == -Rational::one() {
                format!("-{}", w.fmt_with(names))
            } else {
                format!("{}*{}", fmt_rational(c), w.fmt_with(names))
            };
            parts.push(token);
        }
        parts.join(" ")
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.concat(b), x * y);
            }
        }
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&-Rational::one())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for NCPoly {
            type Output = NCPoly;
            fn $m(self, rhs: NCPoly) -> NCPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub name: String,
    pub poly: NCPoly,
}

/// Generators, central flags and relations (each relation reads `poly = 0`).
///
/// Central generators commute with everything by construction: words are
/// normalized with all central letters moved to the front.
#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    names: Vec<String>,
    central: Vec<bool>,
    relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(names: &[&str]) -> Self {
        assert!(names.len() < 256);
        Presentation {
            names: names.iter().map(|s| s.to_string()).collect(),
            central: vec![false; names.len()],
            relations: Vec::new(),
        }
    }

    pub fn with_central(mut self, name: &str) -> Self {
        let i = self.index_of(name).unwrap_or_else(|| panic!("unknown generator {name}"));
        self.central[i] = true;
        self
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn num_gens(&self) -> usize {
        self.names.len()
    }

    pub fn is_central(&self, i: usize) -> bool {
        self.central[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The generator called `name`; panics if there is none.
    pub fn gen(&self, name: &str) -> NCPoly {
        NCPoly::gen(self.index_of(name).unwrap_or_else(|| panic!("unknown generator {name}")))
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn add_relation(&mut self, name: impl Into<String>, poly: NCPoly) {
        self.relations.push(Relation { name: name.into(), poly });
    }

    pub fn with_relation(mut self, name: impl Into<String>, poly: NCPoly) -> Self {
        self.add_relation(name, poly);
        self
    }

    /// Copy keeping only the relations accepted by `keep`.
    pub fn filter_relations(&self, keep: impl Fn(&Relation) -> bool) -> Self {
        Presentation {
            names: self.names.clone(),
            central: self.central.clone(),
            relations: self.relations.iter().filter(|r| keep(r)).cloned().collect(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.relations.iter().filter_map(|r| self.normalize(&r.poly).degree()).max().unwrap_or(0)
    }

    pub fn normalize_word(&self, w: &Word) -> Word {
        if !self.central.iter().any(|&c| c) {
            return w.clone();
        }
        let mut cent: Vec<u8> = w.letters().iter().copied().filter(|&g| self.central[g as usize]).collect();
        cent.sort_unstable();
        cent.extend(w.letters().iter().copied().filter(|&g| !self.central[g as usize]));
        Word(cent)
    }

    pub fn normalize(&self, p: &NCPoly) -> NCPoly {
        NCPoly::from_terms(p.terms().map(|(w, c)| (self.normalize_word(w), c.clone())))
    }

    pub fn fmt_poly(&self, p: &NCPoly) -> String {
        p.fmt_with(&self.names)
    }

    /// Parses the text format:
    ///
    /// ```text
    /// # comment
    /// gens A B C
    /// central C
    /// rel name: A*B*A -2*A*B 3/2*A -6
    /// ```
    ///
    /// A relation lists whitespace-separated terms `[±][coefficient*]word`
    /// and means that their sum vanishes; a bare number is a constant term.
    pub fn parse(text: &str) -> Result<Self> {
        let mut pres: Option<Presentation> = None;
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let err = |msg: String| Error::Parse { line: line_no, msg };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match head {
                "gens" => {
                    if pres.is_some() {
                        return Err(err("generators declared twice".into()));
                    }
                    let names: Vec<&str> = rest.split_whitespace().collect();
                    if names.is_empty() {
                        return Err(err("no generators".into()));
                    }
                    for n in &names {
                        if !n.chars().next().is_some_and(|c| c.is_alphabetic()) || n.contains('*') {
                            return Err(err(format!("bad generator name `{n}`")));
                        }
                    }
                    let unique: HashSet<&&str> = names.iter().collect();
                    if unique.len() != names.len() {
                        return Err(err("repeated generator name".into()));
                    }
                    pres = Some(Presentation::new(&names));
                }
                "central" => {
                    let p = pres.as_mut().ok_or_else(|| err("`central` before `gens`".into()))?;
                    for n in rest.split_whitespace() {
                        let i = p.index_of(n).ok_or_else(|| err(format!("unknown generator `{n}`")))?;
                        p.central[i] = true;
                    }
                }
                "rel" => {
                    let p = pres.as_mut().ok_or_else(|| err("`rel` before `gens`".into()))?;
                    let (name, body) = rest.split_once(':').ok_or_else(|| err("expected `rel name: terms`".into()))?;
                    let poly = p.parse_poly(body).map_err(err)?;
                    p.add_relation(name.trim(), poly);
                }
                other => return Err(err(format!("unknown directive `{other}`"))),
            }
        }
        pres.ok_or(Error::Parse { line: 0, msg: "missing `gens` line".into() })
    }

    /// Parses a whitespace-separated list of terms.
    pub fn parse_poly(&self, body: &str) -> std::result::Result<NCPoly, String> {
        let mut poly = NCPoly::zero();
        for token in body.split_whitespace() {
            let (sign, t) = match token.strip_prefix('-') {
                Some(t) => (-Rational::one(), t),
                None => (Rational::one(), token.strip_prefix('+').unwrap_or(token)),
            };
            let mut pieces = t.split('*').peekable();
            let mut coeff = sign;
            if let Some(c) = pieces.peek().and_then(|s| parse_rational(s)) {
                coeff *= c;
                pieces.next();
            }
            let mut letters = Vec::new();
            for name in pieces {
                let i = self.index_of(name).ok_or_else(|| format!("unknown generator `{name}` in `{token}`"))?;
                letters.push(i as u8);
            }
            poly.add_term(Word(letters), coeff);
        }
        Ok(poly)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("gens {}\n", self.names.join(" "));
        let central: Vec<&str> =
            self.names.iter().zip(&self.central).filter(|(_, &c)| c).map(|(n, _)| n.as_str()).collect();
        if !central.is_empty() {
            s += &format!("central {}\n", central.join(" "));
        }
        for r in &self.relations {
            s += &format!("rel {}: {}\n", r.name, self.fmt_poly(&r.poly));
        }
        s
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn to_fp(row: &[(usize, Rational)]) -> Option<SparseVec<Fp>> {
    let mut out = Vec::with_capacity(row.len());
    for (c, x) in row {
        let v = Fp::from_rational(x)?;
        if !v.is_zero() {
            out.push((*c, v));
        }
    }
    Some(out)
}

/// The space of normalized words of length `≤ L` modulo `I_L`, in reduced
/// echelon form with the largest word of each row as pivot. Non-pivot words
/// are the standard words; every element has a unique normal form supported
/// on them.
#[derive(Clone, Debug)]
pub struct TruncatedQuotient {
    level: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    ideal: SparseRref<Rational>,
}

impl TruncatedQuotient {
    pub fn new(pres: &Presentation, level: usize) -> Self {
        let mut by_len: Vec<Vec<Word>> = vec![vec![Word::empty()]];
        for n in 1..=level {
            let mut next: Vec<Word> = by_len[n - 1]
                .iter()
                .flat_map(|w| (0..pres.num_gens()).map(move |g| pres.normalize_word(&w.concat(&Word(vec![g as u8])))))
                .collect::<HashSet<_>>()
                .into_iter()
                .collect();
            next.sort();
            by_len.push(next);
        }
        let words: Vec<Word> = by_len.iter().flatten().cloned().collect();
        let index: HashMap<Word, usize> = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let plain: Vec<&Word> =
            words.iter().filter(|w| w.letters().iter().all(|&g| !pres.is_central(g as usize))).collect();

        let mut modp = SparseRref::<Fp>::new(words.len());
        let mut ideal = SparseRref::<Rational>::new(words.len());
        let relations: Vec<NCPoly> = pres.relations.iter().map(|r| pres.normalize(&r.poly)).collect();
        for room in 0..=level {
            for rel in &relations {
                let Some(d) = rel.degree() else { continue };
                if d + room > level {
                    continue;
                }
                for u in words.iter().filter(|u| u.len() <= room) {
                    for v in plain.iter().filter(|v| u.len() + v.len() == room) {
                        let mut row: Vec<(usize, Rational)> = rel
                            .terms()
                            .map(|(w, c)| (index[&pres.normalize_word(&u.concat(w).concat(v))], c.clone()))
                            .collect();
                        row.sort_by_key(|e| e.0);
                        let keep = match to_fp(&row) {
                            Some(fr) => modp.insert(&fr),
                            None => true,
                        };
                        if keep {
                            ideal.insert(&row);
                        }
                    }
                }
            }
        }
        TruncatedQuotient { level, words, index, ideal }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    pub fn rank(&self) -> usize {
        self.ideal.rank()
    }

    /// `#words − rank(I_L)`.
    pub fn dim(&self) -> usize {
        self.words.len() - self.ideal.rank()
    }

    pub fn standard_words(&self) -> Vec<&Word> {
        (0..self.words.len()).filter(|&i| !self.ideal.is_pivot(i)).map(|i| &self.words[i]).collect()
    }

    fn to_sparse(&self, pres: &Presentation, p: &NCPoly) -> Option<SparseVec<Rational>> {
        let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
        for (w, c) in p.terms() {
            let i = *self.index.get(&pres.normalize_word(w))?;
            let e = row.entry(i).or_insert_with(Rational::zero);
            *e += c;
        }
        Some(row.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    /// Normal form modulo `I_L`; `None` if `p` involves words longer than `L`.
    pub fn normal_form(&self, pres: &Presentation, p: &NCPoly) -> Option<NCPoly> {
        let row = self.ideal.reduce(&self.to_sparse(pres, p)?);
        Some(NCPoly::from_terms(row.into_iter().map(|(i, c)| (self.words[i].clone(), c))))
    }

    fn reduce_sparse(&self, pres: &Presentation, p: &NCPoly) -> Option<SparseVec<Rational>> {
        Some(self.ideal.reduce(&self.to_sparse(pres, p)?))
    }
}

/// Upper bound on the dimension of the degree-`≤ L` part of the quotient.
pub fn truncated_dim(pres: &Presentation, level: usize) -> usize {
    TruncatedQuotient::new(pres, level).dim()
}

/// First truncation degree tried by [`certify`].
pub fn start_level(pres: &Presentation) -> usize {
    (pres.max_degree() + 1).max(4)
}

/// Proof that `basis` spans the quotient algebra, with the left action of
/// each generator on it.
///
/// Sending coordinates `v` to `Σ v_i·basis[i]` is a surjective module map
/// onto the quotient. After [`ClosureCertificate::refine`] it is a
/// bijection, so the dimension is exact and zero tests are decisive in both
/// directions.
#[derive(Clone, Debug)]
pub struct ClosureCertificate {
    pub level: usize,
    pub basis: Vec<Word>,
    /// Column `j` of `action[g]` holds the coordinates of `g·basis[j]`.
    pub action: Vec<Matrix<Rational>>,
    /// Coordinates of the unit.
    pub unit: Vec<Rational>,
    /// Whether the coordinate map is known to be injective.
    pub exact: bool,
}

fn basis_vec(d: usize, k: usize) -> Vec<Rational> {
    (0..d).map(|i| if i == k { Rational::one() } else { Rational::zero() }).collect()
}

impl ClosureCertificate {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn apply_word(&self, w: &Word, mut v: Vec<Rational>) -> Vec<Rational> {
        for &g in w.letters().iter().rev() {
            v = self.action[g as usize].mul_vec(&v);
        }
        v
    }

    /// Coordinates of `p` in the basis, computed through the left action.
    /// Zero coordinates prove `p` lies in the ideal; for an exact
    /// certificate nonzero coordinates prove that it does not.
    pub fn coords(&self, p: &NCPoly) -> Vec<Rational> {
        let mut acc = vec![Rational::zero(); self.dim()];
        for (w, c) in p.terms() {
            for (a, x) in acc.iter_mut().zip(self.apply_word(w, self.unit.clone())) {
                *a += c * x;
            }
        }
        acc
    }

    pub fn reduces_to_zero(&self, p: &NCPoly) -> bool {
        self.coords(p).iter().all(Zero::is_zero)
    }

    /// Matrix of left multiplication by `p`.
    pub fn left_operator(&self, p: &NCPoly) -> Matrix<Rational> {
        p.eval(&self.action, &Matrix::identity(self.dim()))
    }

    /// `table[i][j]` = coordinates of `basis[i]·basis[j]`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<Rational>>> {
        let d = self.dim();
        (0..d).map(|i| (0..d).map(|j| self.apply_word(&self.basis[i], basis_vec(d, j))).collect()).collect()
    }

    /// Quotients the coordinate space by the smallest invariant subspace
    /// containing the images of all relations (and of the commutators of
    /// central generators), then keeps the cyclic submodule generated by the
    /// unit. The result is an exact certificate of the quotient algebra.
    pub fn refine(&self, pres: &Presentation) -> ClosureCertificate {
        let d = self.dim();
        let ident = Matrix::identity(d);
        let mut killers: Vec<Matrix<Rational>> =
            pres.relations().iter().map(|r| r.poly.eval(&self.action, &ident)).collect();
        for c in (0..pres.num_gens()).filter(|&c| pres.is_central(c)) {
            for g in 0..pres.num_gens() {
                killers.push(self.action[c].commutator(&self.action[g]));
            }
        }
        let sparse = |v: &[Rational]| -> SparseVec<Rational> {
            v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
        };
        let mut sub = SparseRref::new(d);
        let mut queue: VecDeque<Vec<Rational>> = VecDeque::new();
        for m in &killers {
            for j in 0..d {
                let col = m.column(j);
                if sub.insert(&sparse(&col)) {
                    queue.push_back(col);
                }
            }
        }
        while let Some(v) = queue.pop_front() {
            for m in &self.action {
                let w = m.mul_vec(&v);
                if sub.insert(&sparse(&w)) {
                    queue.push_back(w);
                }
            }
        }
        let reduce = |v: &[Rational]| {
            let mut out = vec![Rational::zero(); d];
            for (i, x) in sub.reduce(&sparse(v)) {
                out[i] = x;
            }
            out
        };

        let tagged = |v: Vec<Rational>, tag: usize| {
            let mut t = v;
            t.extend(basis_vec(d + 1, tag));
            t
        };
        let mut cyc = Echelon::new(d);
        let mut words: Vec<Word> = Vec::new();
        let mut vecs: Vec<Vec<Rational>> = Vec::new();
        let u = reduce(&self.unit);
        if u.iter().any(|x| !x.is_zero()) {
            cyc.insert(tagged(u.clone(), 0)).expect("nonzero vector");
            words.push(Word::empty());
            vecs.push(u);
        }
        let mut k = 0;
        while k < vecs.len() {
            for (g, m) in self.action.iter().enumerate() {
                let v = reduce(&m.mul_vec(&vecs[k]));
                if cyc.insert(tagged(v.clone(), words.len())).is_ok() {
                    words.push(pres.normalize_word(&Word(vec![g as u8]).concat(&words[k])));
                    vecs.push(v);
                }
            }
            k += 1;
        }
        let n = vecs.len();
        let express = |v: Vec<Rational>| {
            let mut t = tagged(v, d);
            cyc.reduce(&mut t);
            debug_assert!(t[..d].iter().all(Zero::is_zero));
            let lead = t[2 * d].clone();
            (0..n).map(|i| -t[d + i].clone() / lead.clone()).collect::<Vec<_>>()
        };
        let action = self
            .action
            .iter()
            .map(|m| {
                let mut out = Matrix::zeros(n, n);
                for (j, v) in vecs.iter().enumerate() {
                    for (i, c) in express(reduce(&m.mul_vec(v))).into_iter().enumerate() {
                        out.set(i, j, c);
                    }
                }
                out
            })
            .collect();
        let unit = if n == 0 { Vec::new() } else { basis_vec(n, 0) };
        ClosureCertificate { level: self.level, basis: words, action, unit, exact: true }
    }
}

/// Finds a closed basis of standard words by breadth-first search from the
/// empty word at truncation degree `level`.
pub fn find_basis(pres: &Presentation, level: usize) -> Result<ClosureCertificate> {
    let tq = TruncatedQuotient::new(pres, level);
    Ok(find_basis_in(pres, &tq)?.refine(pres))
}

fn find_basis_in(pres: &Presentation, tq: &TruncatedQuotient) -> Result<ClosureCertificate> {
    let level = tq.level;
    let mut basis: Vec<usize> = Vec::new();
    let mut pos: HashMap<usize, usize> = HashMap::new();
    let one = tq.reduce_sparse(pres, &NCPoly::one()).expect("the unit is a word");
    let mut queue: VecDeque<usize> = VecDeque::new();
    for (i, _) in &one {
        pos.insert(*i, basis.len());
        basis.push(*i);
        queue.push_back(*i);
    }
    let mut columns: Vec<Vec<SparseVec<Rational>>> = vec![Vec::new(); pres.num_gens()];
    let mut k = 0;
    while k < basis.len() {
        let w = tq.words[basis[k]].clone();
        if w.len() >= level {
            return Err(Error::NotClosed(level));
        }
        for (g, col) in columns.iter_mut().enumerate() {
            let gw = Word(vec![g as u8]).concat(&w);
            let nf = tq.reduce_sparse(pres, &NCPoly::monomial(gw, Rational::one())).expect("length checked");
            for (i, _) in &nf {
                if !pos.contains_key(i) {
                    pos.insert(*i, basis.len());
                    basis.push(*i);
                }
            }
            col.push(nf);
        }
        k += 1;
    }
    let d = basis.len();
    let action = columns
        .iter()
        .map(|cols| {
            let mut m = Matrix::zeros(d, d);
            for (j, nf) in cols.iter().enumerate() {
                for (i, c) in nf {
                    m.set(pos[i], j, c.clone());
                }
            }
            m
        })
        .collect();
    let mut unit = vec![Rational::zero(); d];
    for (i, c) in &one {
        unit[pos[i]] = c.clone();
    }
    let basis = basis.into_iter().map(|i| tq.words[i].clone()).collect();
    Ok(ClosureCertificate { level, basis, action, unit, exact: false })
}

/// Certifies that the given words span the quotient, at truncation degree
/// `level`. The basis must contain the empty word and be independent modulo
/// `I_L`.
pub fn certify_with_basis(pres: &Presentation, basis: &[Word], level: usize) -> Result<ClosureCertificate> {
    let tq = TruncatedQuotient::new(pres, level);
    certify_with_basis_in(pres, &tq, basis)
}

fn certify_with_basis_in(pres: &Presentation, tq: &TruncatedQuotient, basis: &[Word]) -> Result<ClosureCertificate> {
    let level = tq.level;
    let d = basis.len();
    let unit = basis
        .iter()
        .position(|w| pres.normalize_word(w).is_empty())
        .ok_or_else(|| Error::Invalid("basis must contain the empty word".into()))?;
    let standard: Vec<usize> = (0..tq.words.len()).filter(|&i| !tq.ideal.is_pivot(i)).collect();
    let slot: HashMap<usize, usize> = standard.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let width = standard.len();
    let dense = |row: &SparseVec<Rational>, tag: usize| {
        let mut v = vec![Rational::zero(); width + d + 1];
        for (i, c) in row {
            v[slot[i]] = c.clone();
        }
        v[width + tag] = Rational::one();
        v
    };
    let mut echelon = Echelon::new(width);
    for (k, b) in basis.iter().enumerate() {
        if b.len() >= level {
            return Err(Error::NotClosed(level));
        }
        let nf = tq.reduce_sparse(pres, &NCPoly::monomial(b.clone(), Rational::one())).expect("length checked");
        if echelon.insert(dense(&nf, k)).is_ok() {
            continue;
        }
        return Err(Error::DependentBasis);
    }
    let mut action = vec![Matrix::zeros(d, d); pres.num_gens()];
    for (j, b) in basis.iter().enumerate() {
        for (g, m) in action.iter_mut().enumerate() {
            let gb = Word(vec![g as u8]).concat(b);
            let nf = tq.reduce_sparse(pres, &NCPoly::monomial(gb, Rational::one())).expect("length checked");
            let mut v = dense(&nf, d);
            echelon.reduce(&mut v);
            if v[..width].iter().any(|x| !x.is_zero()) {
                return Err(Error::NotClosed(level));
            }
            // Σ tag_i·b_i + tag_d·(g b_j) = 0.
            let t = v[width + d].clone();
            for i in 0..d {
                m.set(i, j, -v[width + i].clone() / t.clone());
            }
        }
    }
    Ok(ClosureCertificate { level, basis: basis.to_vec(), action, unit: basis_vec(d, unit), exact: false })
}

/// `true` iff `basis` provably spans the quotient at truncation degree
/// `level`; `false` is inconclusive.
pub fn certify_closure(pres: &Presentation, basis: &[Word], level: usize) -> bool {
    certify_with_basis(pres, basis, level).is_ok()
}

/// Runs [`find_basis`] at increasing degrees from [`start_level`] up to
/// `lmax`.
pub fn certify(pres: &Presentation, lmax: usize) -> Result<ClosureCertificate> {
    let mut last = Error::NotClosed(lmax);
    for level in start_level(pres)..=lmax {
        match find_basis(pres, level) {
            Ok(c) => return Ok(c),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// Structure constants of the quotient in the given basis.
pub fn structure_constants(pres: &Presentation, basis: &[Word], level: usize) -> Result<Vec<Vec<Vec<Rational>>>> {
    Ok(certify_with_basis(pres, basis, level)?.structure_constants())
}

/// Whether the substitution `gen_i ↦ images[i]` sends every relation of
/// `src` into the ideal of `dst`. `Err(NotClosed)` means inconclusive: no
/// certificate for `dst` was found at degree `level`. Given `dst_basis`, a
/// nonzero result is a genuine failure as soon as that basis is independent
/// in the quotient.
pub fn check_homomorphism(
    src: &Presentation,
    images: &[NCPoly],
    dst: &Presentation,
    dst_basis: Option<&[Word]>,
    level: usize,
) -> Result<bool> {
    if images.len() != src.num_gens() {
        return Err(Error::Invalid("one image per source generator is required".into()));
    }
    let cert = match dst_basis {
        Some(b) => certify_with_basis(dst, b, level)?,
        None => find_basis(dst, level)?,
    };
    Ok(homomorphism_holds(src, images, &cert))
}

/// [`check_homomorphism`] against an existing certificate. Centrality of
/// central source generators is part of the check.
pub fn homomorphism_holds(src: &Presentation, images: &[NCPoly], cert: &ClosureCertificate) -> bool {
    let relations_ok = src.relations.iter().all(|r| cert.reduces_to_zero(&r.poly.substitute(images)));
    let central_ok = (0..src.num_gens())
        .filter(|&i| src.is_central(i))
        .all(|i| (0..src.num_gens()).all(|k| cert.reduces_to_zero(&images[i].commutator(&images[k]))));
    relations_ok && central_ok
}

/// Parses a word written as `A*B*A` (or `1` for the empty word).
pub fn parse_word(pres: &Presentation, s: &str) -> Result<Word> {
    let s = s.trim();
    if s == "1" {
        return Ok(Word::empty());
    }
    let mut letters = Vec::new();
    for name in s.split('*') {
        let i = pres.index_of(name.trim()).ok_or_else(|| Error::Invalid(format!("unknown generator `{name}`")))?;
        letters.push(i as u8);
    }
    Ok(Word(letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, qi};

    fn tl() -> Presentation {
        Presentation::parse(
            "gens s1 s2\nrel a: s1*s1 -2*s1\nrel b: s2*s2 -2*s2\nrel c: s1*s2*s1 -s1\nrel d: s2*s1*s2 -s2\n",
        )
        .unwrap()
    }

    #[test]
    fn word_order_is_length_lex() {
        let mut ws = vec![Word::new(vec![1]), Word::new(vec![0, 0]), Word::empty(), Word::new(vec![0])];
        ws.sort();
        assert_eq!(ws, vec![Word::empty(), Word::new(vec![0]), Word::new(vec![1]), Word::new(vec![0, 0])]);
    }

    #[test]
    fn text_round_trip() {
        let p = Presentation::parse("gens A B C\ncentral C\nrel r: A*B -3/2*B*A 2 -C\n").unwrap();
        assert!(p.is_central(2));
        let again = Presentation::parse(&p.to_text()).unwrap();
        assert_eq!(p, again);
        assert!(Presentation::parse("gens A\nrel r: A*Z\n").is_err());
    }

    #[test]
    fn temperley_lieb_dimension() {
        assert_eq!(truncated_dim(&tl(), 5), 5);
        let cert = certify(&tl(), 7).unwrap();
        assert_eq!(cert.dim(), 5);
    }

    #[test]
    fn central_generators_commute() {
        let p = Presentation::new(&["A", "C"]).with_central("C");
        let tq = TruncatedQuotient::new(&p, 3);
        let (a, c) = (p.gen("A"), p.gen("C"));
        assert!(tq.normal_form(&p, &a.commutator(&c)).unwrap().is_zero());
    }

    #[test]
    fn free_algebra_never_closes() {
        let p = Presentation::new(&["A", "B"]);
        assert!(!certify_closure(&p, &[Word::empty()], 5));
        assert!(certify(&p, 6).is_err());
    }

    #[test]
    fn regular_action_zero_test() {
        let p = tl();
        let cert = certify(&p, 6).unwrap();
        let (s1, s2) = (p.gen("s1"), p.gen("s2"));
        let x = &(&(&s1 * &s2) * &s1) - &s1;
        assert!(cert.reduces_to_zero(&x));
        assert!(!cert.reduces_to_zero(&(&s1 * &s2)));
        let sc = cert.structure_constants();
        assert_eq!(sc[0][0][0], qi(1));
        let op = cert.left_operator(&s1.add_scalar(&q(-1, 1)));
        assert_eq!(op.rows(), 5);
    }
}
