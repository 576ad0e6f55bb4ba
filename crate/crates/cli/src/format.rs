//! Canonical line-oriented text encoding.
//!
//! Every file starts with a header
//!
//! ```text
//! detrep v1 <kind> r=<r|-> g=<g|-> field=<q|p:N>
//! ```
//!
//! followed by a kind-specific body. Rationals are written `p/q`, or `p`
//! when `q = 1`; a linear form is its `g` coefficients; a univariate
//! polynomial is its coefficients from low to high degree (`0` for zero); a
//! multivariate polynomial is one `coeff e1 .. eg` line per term in ascending
//! degree-lexicographic order. Serializing a parsed canonical file reproduces
//! it byte for byte.

use std::fmt::Write as _;
use std::str::FromStr;

use detrep::algebra::Monomial;
use detrep::curve::DropFactor;
use detrep::linform::LinearForm;
use detrep::{
    Disambiguation, EquivalenceCertificate, LinFormMatrix, MultiPoly, ParamCurve, PetriTensor, PointCloudCurve,
    RankProfile, ReconstructionReport, Scalar, ScalarMatrix, SheafBasis, UniPoly, UniPolyMatrix,
};
use thiserror::Error;

pub const VERSION: &str = "v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct FormatError {
    pub line: usize,
    pub msg: String,
}

/// Coefficient field tag carried in the header.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldTag {
    Rationals,
    Prime(u64),
}

impl std::fmt::Display for FieldTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldTag::Rationals => write!(f, "q"),
            FieldTag::Prime(p) => write!(f, "p:{p}"),
        }
    }
}

impl FromStr for FieldTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "q" {
            return Ok(FieldTag::Rationals);
        }
        let p = s
            .strip_prefix("p:")
            .ok_or_else(|| format!("field must be `q` or `p:<prime>`, got `{s}`"))?
            .parse::<u64>()
            .map_err(|e| format!("bad prime in `{s}`: {e}"))?;
        if !detrep::algebra::modp::is_prime(p) {
            return Err(format!("{p} is not prime"));
        }
        Ok(FieldTag::Prime(p))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    LinFormMatrix(LinFormMatrix),
    PetriTensor(PetriTensor),
    Certificate(EquivalenceCertificate),
    Curve(ParamCurve),
    Points(PointCloudCurve),
    MultiPoly(MultiPoly),
    UniPolyMatrix(UniPolyMatrix),
    SheafBasis(SheafBasis),
    RankProfile(RankProfile),
    Report(Box<ReconstructionReport>),
}

impl Body {
    pub fn kind(&self) -> &'static str {
        match self {
            Body::LinFormMatrix(_) => "linform-matrix",
            Body::PetriTensor(_) => "petri-tensor",
            Body::Certificate(_) => "certificate",
            Body::Curve(_) => "curve",
            Body::Points(_) => "points",
            Body::MultiPoly(_) => "multipoly",
            Body::UniPolyMatrix(_) => "unipoly-matrix",
            Body::SheafBasis(_) => "sheaf-basis",
            Body::RankProfile(_) => "rank-profile",
            Body::Report(_) => "report",
        }
    }

    fn r(&self) -> Option<usize> {
        match self {
            Body::LinFormMatrix(m) => Some(m.r()),
            Body::PetriTensor(t) => Some(t.r()),
            Body::Certificate(c) => Some(c.s.rows() - 1),
            Body::Report(rep) => Some(rep.candidate_plain.basis.rows() - 1),
            _ => None,
        }
    }

    fn g(&self) -> Option<usize> {
        match self {
            Body::LinFormMatrix(m) => Some(m.ambient()),
            Body::PetriTensor(t) => Some(t.g()),
            Body::Curve(c) => Some(c.ambient()),
            Body::Points(p) => Some(p.ambient()),
            Body::MultiPoly(f) => Some(f.nvars()),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile {
    pub field: FieldTag,
    pub body: Body,
}

impl InstanceFile {
    pub fn new(field: FieldTag, body: Body) -> Self {
        InstanceFile { field, body }
    }

    pub fn serialize(&self) -> String {
        let dash = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
        let mut out = format!(
            "detrep {VERSION} {} r={} g={} field={}\n",
            self.body.kind(),
            dash(self.body.r()),
            dash(self.body.g()),
            self.field
        );
        write_body(&mut out, &self.body);
        out
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut cur = Cursor::new(text);
        let (line_no, header) = cur.next().ok_or(FormatError { line: 1, msg: "empty file".into() })?;
        let err = |msg: String| FormatError { line: line_no, msg };
        let words: Vec<&str> = header.split(' ').collect();
        let [magic, version, kind, r, g, field] = words[..] else {
            return Err(err(format!("malformed header `{header}`")));
        };
        if magic != "detrep" || version != VERSION {
            return Err(err(format!("expected `detrep {VERSION}`, got `{magic} {version}`")));
        }
        let dim = |s: &str, key: &str| -> Result<Option<usize>, FormatError> {
            let v = s.strip_prefix(key).ok_or_else(|| err(format!("expected `{key}...`, got `{s}`")))?;
            if v == "-" {
                Ok(None)
            } else {
                v.parse().map(Some).map_err(|_| err(format!("bad number `{v}`")))
            }
        };
        let r = dim(r, "r=")?;
        let g = dim(g, "g=")?;
        let field = field
            .strip_prefix("field=")
            .ok_or_else(|| err("missing field tag".into()))?
            .parse::<FieldTag>()
            .map_err(err)?;
        let need = |v: Option<usize>, name: &str| v.ok_or_else(|| err(format!("{kind} needs {name}")));
        let body = match kind {
            "linform-matrix" => Body::LinFormMatrix(read_linform_matrix(&mut cur, need(r, "r")?, need(g, "g")?)?),
            "petri-tensor" => {
                let (r, g) = (need(r, "r")?, need(g, "g")?);
                let m = read_linform_matrix(&mut cur, r, g)?;
                Body::PetriTensor(PetriTensor::from_matrix(&m))
            }
            "certificate" => Body::Certificate(read_certificate(&mut cur)?),
            "curve" => {
                let g = need(g, "g")?;
                let coords = (0..g).map(|_| cur.unipoly()).collect::<Result<Vec<_>, _>>()?;
                Body::Curve(ParamCurve::new(coords).map_err(|e| cur.error(e.to_string()))?)
            }
            "points" => {
                let g = need(g, "g")?;
                let mut pts = Vec::new();
                while cur.peek().is_some() {
                    pts.push(cur.scalars(Some(g))?);
                }
                Body::Points(PointCloudCurve::new(g, pts).map_err(|e| cur.error(e.to_string()))?)
            }
            "multipoly" => {
                let g = need(g, "g")?;
                let mut terms = Vec::new();
                while cur.peek().is_some() {
                    let (line, text) = cur.next().expect("peeked");
                    let words: Vec<&str> = text.split(' ').collect();
                    if words.len() != g + 1 {
                        return Err(FormatError { line, msg: format!("expected coefficient and {g} exponents") });
                    }
                    let c = parse_scalar(words[0], line)?;
                    let exps = words[1..]
                        .iter()
                        .map(|w| w.parse::<u32>().map_err(|_| FormatError { line, msg: format!("bad exponent `{w}`") }))
                        .collect::<Result<Vec<_>, _>>()?;
                    terms.push((Monomial::new(exps), c));
                }
                Body::MultiPoly(MultiPoly::from_terms(g, terms))
            }
            "unipoly-matrix" => Body::UniPolyMatrix(read_unipoly_matrix(&mut cur)?),
            "sheaf-basis" => Body::SheafBasis(read_sheaf_basis(&mut cur)?),
            "rank-profile" => Body::RankProfile(read_rank_profile(&mut cur)?),
            "report" => Body::Report(Box::new(read_report(&mut cur)?)),
            other => return Err(err(format!("unknown kind `{other}`"))),
        };
        if let Some((line, text)) = cur.next() {
            return Err(FormatError { line, msg: format!("unexpected trailing line `{text}`") });
        }
        let file = InstanceFile { field, body };
        if file.body.r() != r || file.body.g() != g {
            return Err(err("header dimensions do not match the body".into()));
        }
        Ok(file)
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn unipoly_line(p: &UniPoly) -> String {
    if p.is_zero() {
        "0".into()
    } else {
        join(p.coeffs())
    }
}

fn write_matrix(out: &mut String, m: &ScalarMatrix) {
    for i in 0..m.rows() {
        writeln!(out, "{}", join(m.row(i))).unwrap();
    }
}

fn write_unipoly_matrix(out: &mut String, m: &UniPolyMatrix) {
    writeln!(out, "dims {} {}", m.rows(), m.cols()).unwrap();
    for p in m.entries() {
        writeln!(out, "{}", unipoly_line(p)).unwrap();
    }
}

fn write_sheaf(out: &mut String, s: &SheafBasis) {
    writeln!(out, "saturated {}", s.saturated).unwrap();
    writeln!(out, "degree_invariant {}", s.degree_invariant).unwrap();
    write_unipoly_matrix(out, &s.basis);
}

fn write_profile(out: &mut String, p: &RankProfile) {
    writeln!(out, "generic_rank {}", p.generic_rank).unwrap();
    for d in &p.drop_locus {
        writeln!(out, "drop {} {}", d.rank, unipoly_line(&d.factor)).unwrap();
    }
}

fn write_certificate(out: &mut String, c: &EquivalenceCertificate) {
    writeln!(out, "transposed {}", c.transposed).unwrap();
    writeln!(out, "c {}", c.c).unwrap();
    writeln!(out, "S").unwrap();
    write_matrix(out, &c.s);
    writeln!(out, "T").unwrap();
    write_matrix(out, &c.t);
}

fn write_body(out: &mut String, body: &Body) {
    match body {
        Body::LinFormMatrix(m) => {
            for e in m.entries() {
                writeln!(out, "{}", join(e.coeffs())).unwrap();
            }
        }
        Body::PetriTensor(t) => {
            for chunk in t.values().chunks(t.g().max(1)) {
                writeln!(out, "{}", join(chunk)).unwrap();
            }
        }
        Body::Certificate(c) => write_certificate(out, c),
        Body::Curve(c) => {
            for p in c.coords() {
                writeln!(out, "{}", unipoly_line(p)).unwrap();
            }
        }
        Body::Points(pc) => {
            for p in pc.points() {
                writeln!(out, "{}", join(p)).unwrap();
            }
        }
        Body::MultiPoly(f) => {
            for (m, c) in f.terms() {
                writeln!(out, "{c} {}", join(m.exponents())).unwrap();
            }
        }
        Body::UniPolyMatrix(m) => write_unipoly_matrix(out, m),
        Body::SheafBasis(s) => write_sheaf(out, s),
        Body::RankProfile(p) => write_profile(out, p),
        Body::Report(rep) => {
            writeln!(out, "disambiguation {:?}", rep.disambiguation).unwrap();
            writeln!(out, "containment_ok {}", rep.containment_ok).unwrap();
            write_profile(out, &rep.rank_profile);
            for (name, s) in [
                ("candidate_plain", &rep.candidate_plain),
                ("candidate_transpose", &rep.candidate_transpose),
                ("kernel_line", &rep.kernel_line),
            ] {
                writeln!(out, "begin {name}").unwrap();
                write_sheaf(out, s);
                writeln!(out, "end").unwrap();
            }
            if let Some(c) = &rep.certificate {
                writeln!(out, "begin certificate").unwrap();
                write_certificate(out, c);
                writeln!(out, "end").unwrap();
            }
        }
    }
}

struct Cursor<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { lines: text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect(), pos: 0 }
    }

    fn peek(&self) -> Option<&'a str> {
        self.lines.get(self.pos).map(|&(_, l)| l)
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let item = self.lines.get(self.pos).copied();
        self.pos += usize::from(item.is_some());
        item
    }

    fn line_no(&self) -> usize {
        self.lines.get(self.pos).map_or(self.lines.len() + 1, |&(n, _)| n)
    }

    fn error(&self, msg: String) -> FormatError {
        FormatError { line: self.line_no().saturating_sub(1).max(1), msg }
    }

    fn require(&mut self) -> Result<(usize, &'a str), FormatError> {
        let line = self.line_no();
        self.next().ok_or(FormatError { line, msg: "unexpected end of file".into() })
    }

    fn scalars(&mut self, expected: Option<usize>) -> Result<Vec<Scalar>, FormatError> {
        let (line, text) = self.require()?;
        let vals = text.split(' ').map(|w| parse_scalar(w, line)).collect::<Result<Vec<_>, _>>()?;
        match expected {
            Some(n) if vals.len() != n => Err(FormatError { line, msg: format!("expected {n} values, got {}", vals.len()) }),
            _ => Ok(vals),
        }
    }

    fn unipoly(&mut self) -> Result<UniPoly, FormatError> {
        let (line, text) = self.require()?;
        let coeffs = text.split(' ').map(|w| parse_scalar(w, line)).collect::<Result<Vec<_>, _>>()?;
        let p = UniPoly::new(coeffs);
        if unipoly_line(&p) != text {
            return Err(FormatError { line, msg: "polynomial is not in canonical form".into() });
        }
        Ok(p)
    }

    /// `key value` line; returns the value.
    fn keyed(&mut self, key: &str) -> Result<(usize, &'a str), FormatError> {
        let (line, text) = self.require()?;
        let rest = text
            .strip_prefix(key)
            .and_then(|r| r.strip_prefix(' '))
            .ok_or(FormatError { line, msg: format!("expected `{key} ...`, got `{text}`") })?;
        Ok((line, rest))
    }

    fn keyed_parse<T: FromStr>(&mut self, key: &str) -> Result<T, FormatError> {
        let (line, v) = self.keyed(key)?;
        v.parse().map_err(|_| FormatError { line, msg: format!("bad value `{v}` for {key}") })
    }

    fn literal(&mut self, expected: &str) -> Result<(), FormatError> {
        let (line, text) = self.require()?;
        if text == expected {
            Ok(())
        } else {
            Err(FormatError { line, msg: format!("expected `{expected}`, got `{text}`") })
        }
    }
}

fn parse_scalar(word: &str, line: usize) -> Result<Scalar, FormatError> {
    let v: Scalar = word.parse().map_err(|_| FormatError { line, msg: format!("bad rational `{word}`") })?;
    if v.to_string() != word {
        return Err(FormatError { line, msg: format!("rational `{word}` is not in lowest terms") });
    }
    Ok(v)
}

fn read_linform_matrix(cur: &mut Cursor, r: usize, g: usize) -> Result<LinFormMatrix, FormatError> {
    let n = r + 1;
    let entries = (0..n * n)
        .map(|_| cur.scalars(Some(g)).map(LinearForm::new))
        .collect::<Result<Vec<_>, _>>()?;
    LinFormMatrix::new(n, g, entries).map_err(|e| cur.error(e.to_string()))
}

fn read_square(cur: &mut Cursor, first: Vec<Scalar>) -> Result<ScalarMatrix, FormatError> {
    let n = first.len();
    let mut rows = vec![first];
    for _ in 1..n {
        rows.push(cur.scalars(Some(n))?);
    }
    Ok(ScalarMatrix::from_rows(rows))
}

fn read_certificate(cur: &mut Cursor) -> Result<EquivalenceCertificate, FormatError> {
    let transposed = cur.keyed_parse::<bool>("transposed")?;
    let (line, c) = cur.keyed("c")?;
    let c = parse_scalar(c, line)?;
    cur.literal("S")?;
    let first = cur.scalars(None)?;
    let s = read_square(cur, first)?;
    cur.literal("T")?;
    let first = cur.scalars(Some(s.rows()))?;
    let t = read_square(cur, first)?;
    Ok(EquivalenceCertificate { s, t, transposed, c })
}

fn read_unipoly_matrix(cur: &mut Cursor) -> Result<UniPolyMatrix, FormatError> {
    let (line, dims) = cur.keyed("dims")?;
    let parsed: Vec<usize> = dims.split(' ').filter_map(|w| w.parse().ok()).collect();
    let [rows, cols] = parsed[..] else {
        return Err(FormatError { line, msg: format!("bad dims `{dims}`") });
    };
    let entries = (0..rows * cols).map(|_| cur.unipoly()).collect::<Result<Vec<_>, _>>()?;
    Ok(UniPolyMatrix::from_vec(rows, cols, entries))
}

fn read_sheaf_basis(cur: &mut Cursor) -> Result<SheafBasis, FormatError> {
    let saturated = cur.keyed_parse::<bool>("saturated")?;
    let degree_invariant = cur.keyed_parse::<usize>("degree_invariant")?;
    let basis = read_unipoly_matrix(cur)?;
    Ok(SheafBasis { basis, saturated, degree_invariant })
}

fn read_rank_profile(cur: &mut Cursor) -> Result<RankProfile, FormatError> {
    let generic_rank = cur.keyed_parse::<usize>("generic_rank")?;
    let mut drop_locus = Vec::new();
    while cur.peek().is_some_and(|l| l.starts_with("drop ")) {
        let (line, rest) = cur.keyed("drop")?;
        let (rank, poly) = rest.split_once(' ').ok_or(FormatError { line, msg: "drop needs rank and factor".into() })?;
        let rank = rank.parse().map_err(|_| FormatError { line, msg: format!("bad rank `{rank}`") })?;
        let coeffs = poly.split(' ').map(|w| parse_scalar(w, line)).collect::<Result<Vec<_>, _>>()?;
        drop_locus.push(DropFactor { factor: UniPoly::new(coeffs), rank });
    }
    Ok(RankProfile { generic_rank, drop_locus })
}

fn read_report(cur: &mut Cursor) -> Result<ReconstructionReport, FormatError> {
    let (line, d) = cur.keyed("disambiguation")?;
    let disambiguation = match d {
        "Plain" => Disambiguation::Plain,
        "Transpose" => Disambiguation::Transpose,
        "Undecided" => Disambiguation::Undecided,
        other => return Err(FormatError { line, msg: format!("unknown disambiguation `{other}`") }),
    };
    let containment_ok = cur.keyed_parse::<bool>("containment_ok")?;
    let rank_profile = read_rank_profile(cur)?;
    let mut sheaf = |name: &str| -> Result<SheafBasis, FormatError> {
        cur.literal(&format!("begin {name}"))?;
        let s = read_sheaf_basis(cur)?;
        cur.literal("end")?;
        Ok(s)
    };
    let candidate_plain = sheaf("candidate_plain")?;
    let candidate_transpose = sheaf("candidate_transpose")?;
    let kernel_line = sheaf("kernel_line")?;
    let certificate = if cur.peek() == Some("begin certificate") {
        cur.next();
        let c = read_certificate(cur)?;
        cur.literal("end")?;
        Some(c)
    } else {
        None
    };
    Ok(ReconstructionReport {
        candidate_plain,
        candidate_transpose,
        rank_profile,
        kernel_line,
        containment_ok,
        disambiguation,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip(text: &str) {
        let parsed = InstanceFile::parse(text).unwrap_or_else(|e| panic!("{e}\n{text}"));
        assert_eq!(parsed.serialize(), text);
    }

    #[test]
    fn linform_round_trip() {
        round_trip("detrep v1 linform-matrix r=1 g=4 field=q\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
        round_trip("detrep v1 linform-matrix r=0 g=2 field=p:7\n-1/2 3\n");
    }

    #[test]
    fn other_kinds_round_trip() {
        round_trip("detrep v1 curve r=- g=3 field=q\n1\n0 1\n0 0 1\n");
        round_trip("detrep v1 points r=- g=2 field=q\n1 2\n1 3\n");
        round_trip("detrep v1 multipoly r=- g=2 field=q\n5 0 0\n-3/2 0 1\n1 2 0\n");
        round_trip("detrep v1 certificate r=1 g=- field=q\ntransposed true\nc -2\nS\n1 0\n0 1\nT\n2 0\n1 -1\n");
        round_trip("detrep v1 sheaf-basis r=- g=- field=q\nsaturated true\ndegree_invariant 0\ndims 2 1\n1\n0 1\n");
        round_trip("detrep v1 rank-profile r=- g=- field=q\ngeneric_rank 2\ndrop 1 0 1\n");
    }

    #[test]
    fn rejects_noncanonical_input() {
        for bad in [
            "detrep v1 linform-matrix r=0 g=1 field=q\n2/4\n",
            "detrep v1 curve r=- g=1 field=q\n1 0\n",
            "detrep v2 curve r=- g=1 field=q\n1\n",
            "detrep v1 curve r=- g=1 field=p:8\n1\n",
            "detrep v1 linform-matrix r=1 g=4 field=q\n1 0 0 0\n",
            "detrep v1 points r=- g=2 field=q\n1 2\n2 4\n",
            "detrep v1 linform-matrix r=0 g=1 field=q\n1\n1\n",
        ] {
            assert!(InstanceFile::parse(bad).is_err(), "accepted:\n{bad}");
        }
    }

    #[test]
    fn field_tags() {
        assert_eq!("q".parse::<FieldTag>(), Ok(FieldTag::Rationals));
        assert_eq!("p:101".parse::<FieldTag>(), Ok(FieldTag::Prime(101)));
        assert!("p:100".parse::<FieldTag>().is_err());
        assert!("r".parse::<FieldTag>().is_err());
    }
}
