//! Stable serialization of analysis products: CSV, JSON, two-column plot data
//! and a minimal SVG line chart. All numbers are integers.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::derived_sets::WitnessRecord;
use crate::error::{Error, Result};
use crate::twin_analysis::{
    CaseLabel, IntervalConvention, PseudoTwinRecord, RecurrenceAudit, SeriesPoint, Theorem6Reading, TwinPair,
};

pub const TOOL_VERSION: &str = concat!("twinsieve ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    CountSeries,
    Pairs,
    Audit,
    Pseudo,
    Witness,
    Theorem6,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::CountSeries => "count_series",
            Kind::Pairs => "pairs",
            Kind::Audit => "audit",
            Kind::Pseudo => "pseudo",
            Kind::Witness => "witness",
            Kind::Theorem6 => "theorem6",
        }
    }
}

/// Arbitrary-precision natural emitted as a bare JSON integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigNat(pub BigUint);

impl Serialize for BigNat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = serde_json::Number::from_str(&self.0.to_string()).map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BigNat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        BigUint::from_str(&n.to_string()).map(BigNat).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountSeriesRow {
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "p_M")]
    pub p_m: u64,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRow {
    pub q: u64,
    pub q_plus_2: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRow {
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "count_M")]
    pub count_m: usize,
    #[serde(rename = "count_M1")]
    pub count_m1: usize,
    pub loss: u8,
    pub gain_x: usize,
    pub case_label: String,
    pub identity_ok: bool,
    pub inequality_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoRow {
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "p_M")]
    pub p_m: u64,
    #[serde(rename = "q_M")]
    pub q_m: Option<u64>,
    pub in_interval: bool,
    pub certified_twin: bool,
    pub search_limit: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRow {
    #[serde(rename = "M")]
    pub m: usize,
    pub q: BigNat,
    pub j: usize,
    pub p_j: u64,
    pub gcd_q_plus_2: u64,
    pub gcd_q_plus_4: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem6Row {
    pub x: u64,
    pub q: Option<u64>,
    pub q_plus_2: Option<u64>,
}

/// Flat CSV encoding of one row type.
trait CsvRow: Sized {
    const HEADER: &'static [&'static str];
    fn fields(&self) -> Vec<String>;
    fn parse(fields: &[&str]) -> Result<Self>;
}

fn num<T: FromStr>(s: &str) -> Result<T> {
    s.parse().map_err(|_| Error::Parse(format!("bad integer field `{s}`")))
}

fn opt_num<T: FromStr>(s: &str) -> Result<Option<T>> {
    if s.is_empty() {
        Ok(None)
    } else {
        num(s).map(Some)
    }
}

fn boolean(s: &str) -> Result<bool> {
    match s {
        "true" => Ok(true),
        "false" => Ok(false),
        _ => Err(Error::Parse(format!("bad boolean field `{s}`"))),
    }
}

fn opt_str<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

impl CsvRow for CountSeriesRow {
    const HEADER: &'static [&'static str] = &["M", "p_M", "count"];
    fn fields(&self) -> Vec<String> {
        vec![self.m.to_string(), self.p_m.to_string(), self.count.to_string()]
    }
    fn parse(f: &[&str]) -> Result<Self> {
        Ok(CountSeriesRow { m: num(f[0])?, p_m: num(f[1])?, count: num(f[2])? })
    }
}

impl CsvRow for PairRow {
    const HEADER: &'static [&'static str] = &["q", "q_plus_2"];
    fn fields(&self) -> Vec<String> {
        vec![self.q.to_string(), self.q_plus_2.to_string()]
    }
    fn parse(f: &[&str]) -> Result<Self> {
        Ok(PairRow { q: num(f[0])?, q_plus_2: num(f[1])? })
    }
}

impl CsvRow for AuditRow {
    const HEADER: &'static [&'static str] =
        &["M", "count_M", "count_M1", "loss", "gain_x", "case_label", "identity_ok", "inequality_ok"];
    fn fields(&self) -> Vec<String> {
        vec![
            self.m.to_string(),
            self.count_m.to_string(),
            self.count_m1.to_string(),
            self.loss.to_string(),
            self.gain_x.to_string(),
            self.case_label.clone(),
            self.identity_ok.to_string(),
            self.inequality_ok.to_string(),
        ]
    }
    fn parse(f: &[&str]) -> Result<Self> {
        CaseLabel::from_str(f[5])?;
        Ok(AuditRow {
            m: num(f[0])?,
            count_m: num(f[1])?,
            count_m1: num(f[2])?,
            loss: num(f[3])?,
            gain_x: num(f[4])?,
            case_label: f[5].to_string(),
            identity_ok: boolean(f[6])?,
            inequality_ok: boolean(f[7])?,
        })
    }
}

impl CsvRow for PseudoRow {
    const HEADER: &'static [&'static str] = &["M", "p_M", "q_M", "in_interval", "certified_twin", "search_limit"];
    fn fields(&self) -> Vec<String> {
        vec![
            self.m.to_string(),
            self.p_m.to_string(),
            opt_str(&self.q_m),
            self.in_interval.to_string(),
            self.certified_twin.to_string(),
            self.search_limit.to_string(),
        ]
    }
    fn parse(f: &[&str]) -> Result<Self> {
        Ok(PseudoRow {
            m: num(f[0])?,
            p_m: num(f[1])?,
            q_m: opt_num(f[2])?,
            in_interval: boolean(f[3])?,
            certified_twin: boolean(f[4])?,
            search_limit: num(f[5])?,
        })
    }
}

impl CsvRow for WitnessRow {
    const HEADER: &'static [&'static str] = &["M", "q", "j", "p_j", "gcd_q_plus_2", "gcd_q_plus_4"];
    fn fields(&self) -> Vec<String> {
        vec![
            self.m.to_string(),
            self.q.0.to_string(),
            self.j.to_string(),
            self.p_j.to_string(),
            self.gcd_q_plus_2.to_string(),
            self.gcd_q_plus_4.to_string(),
        ]
    }
    fn parse(f: &[&str]) -> Result<Self> {
        let q = BigUint::from_str(f[1]).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(WitnessRow {
            m: num(f[0])?,
            q: BigNat(q),
            j: num(f[2])?,
            p_j: num(f[3])?,
            gcd_q_plus_2: num(f[4])?,
            gcd_q_plus_4: num(f[5])?,
        })
    }
}

impl CsvRow for Theorem6Row {
    const HEADER: &'static [&'static str] = &["x", "q", "q_plus_2"];
    fn fields(&self) -> Vec<String> {
        vec![self.x.to_string(), opt_str(&self.q), opt_str(&self.q_plus_2)]
    }
    fn parse(f: &[&str]) -> Result<Self> {
        Ok(Theorem6Row { x: num(f[0])?, q: opt_num(f[1])?, q_plus_2: opt_num(f[2])? })
    }
}

/// Typed rows of one envelope kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Rows {
    CountSeries(Vec<CountSeriesRow>),
    Pairs(Vec<PairRow>),
    Audit(Vec<AuditRow>),
    Pseudo(Vec<PseudoRow>),
    Witness(Vec<WitnessRow>),
    Theorem6(Vec<Theorem6Row>),
}

impl Rows {
    pub fn kind(&self) -> Kind {
        match self {
            Rows::CountSeries(_) => Kind::CountSeries,
            Rows::Pairs(_) => Kind::Pairs,
            Rows::Audit(_) => Kind::Audit,
            Rows::Pseudo(_) => Kind::Pseudo,
            Rows::Witness(_) => Kind::Witness,
            Rows::Theorem6(_) => Kind::Theorem6,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Rows::CountSeries(r) => r.len(),
            Rows::Pairs(r) => r.len(),
            Rows::Audit(r) => r.len(),
            Rows::Pseudo(r) => r.len(),
            Rows::Witness(r) => r.len(),
            Rows::Theorem6(r) => r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A fully materialized report: the parameters that reproduce it plus rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportEnvelope {
    pub tool_version: String,
    pub convention: String,
    pub m_range: (usize, usize),
    pub notes: Vec<String>,
    pub rows: Rows,
}

/// Recorded on every count-series envelope.
pub const ROW_INDEX_NOTE: &str = "table row i (1-based, first row M = 2) corresponds to M = i + 1";

impl ReportEnvelope {
    fn new(convention: &str, m_range: (usize, usize), rows: Rows) -> Self {
        ReportEnvelope {
            tool_version: TOOL_VERSION.to_string(),
            convention: convention.to_string(),
            m_range,
            notes: Vec::new(),
            rows,
        }
    }

    pub fn kind(&self) -> Kind {
        self.rows.kind()
    }

    pub fn count_series(points: &[SeriesPoint], convention: IntervalConvention) -> Self {
        let mut rows: Vec<CountSeriesRow> =
            points.iter().map(|s| CountSeriesRow { m: s.m, p_m: s.p_m, count: s.count }).collect();
        rows.sort_by_key(|r| r.m);
        let mut e = Self::new(convention.as_str(), span(rows.iter().map(|r| r.m)), Rows::CountSeries(rows));
        e.notes.push(ROW_INDEX_NOTE.to_string());
        e
    }

    pub fn pairs(pairs: &[(u64, u64)], m_range: (usize, usize), convention: &str) -> Self {
        let mut rows: Vec<PairRow> = pairs.iter().map(|&(q, q_plus_2)| PairRow { q, q_plus_2 }).collect();
        rows.sort_by_key(|r| r.q);
        Self::new(convention, m_range, Rows::Pairs(rows))
    }

    pub fn audit(records: &[RecurrenceAudit]) -> Self {
        let mut rows: Vec<AuditRow> = records
            .iter()
            .map(|a| AuditRow {
                m: a.m,
                count_m: a.count_m,
                count_m1: a.count_m1,
                loss: a.loss,
                gain_x: a.gain_x,
                case_label: a.case_label.as_str().to_string(),
                identity_ok: a.identity_ok,
                inequality_ok: a.inequality_ok,
            })
            .collect();
        rows.sort_by_key(|r| r.m);
        let mut e = Self::new(
            IntervalConvention::Program.as_str(),
            span(rows.iter().map(|r| r.m)),
            Rows::Audit(rows),
        );
        let tally = |f: fn(&RecurrenceAudit) -> CaseLabel| {
            [CaseLabel::Case1, CaseLabel::Case2, CaseLabel::Case3]
                .map(|c| format!("{c}={}", records.iter().filter(|a| f(a) == c).count()))
                .join(" ")
        };
        e.notes.push(format!("case_label keyed on the lost element q = p_M: {}", tally(|a| a.case_label)));
        e.notes.push(format!(
            "alternate keying on (p_(M+1), p_(M+1)+2) being twin: {}",
            tally(|a| a.next_prime_case_label)
        ));
        e
    }

    pub fn pseudo(records: &[PseudoTwinRecord]) -> Self {
        let mut rows: Vec<PseudoRow> = records
            .iter()
            .map(|r| PseudoRow {
                m: r.m,
                p_m: r.p_m,
                q_m: r.q_m,
                in_interval: r.in_interval,
                certified_twin: r.certified_twin,
                search_limit: r.search_limit,
            })
            .collect();
        rows.sort_by_key(|r| r.m);
        Self::new("derived-set", span(rows.iter().map(|r| r.m)), Rows::Pseudo(rows))
    }

    pub fn witness(records: &[WitnessRecord]) -> Self {
        let mut rows: Vec<WitnessRow> = records
            .iter()
            .flat_map(|w| {
                w.checks.iter().map(move |c| WitnessRow {
                    m: w.m,
                    q: BigNat(w.q.clone()),
                    j: c.j,
                    p_j: c.p_j,
                    gcd_q_plus_2: c.gcd_q_plus_2,
                    gcd_q_plus_4: c.gcd_q_plus_4,
                })
            })
            .collect();
        rows.sort_by_key(|r| (r.m, r.j));
        Self::new("primorial", span(rows.iter().map(|r| r.m)), Rows::Witness(rows))
    }

    pub fn theorem6(results: &[(u64, Option<TwinPair>)], reading: Theorem6Reading) -> Self {
        let mut rows: Vec<Theorem6Row> = results
            .iter()
            .map(|&(x, p)| Theorem6Row { x, q: p.map(|p| p.lower()), q_plus_2: p.map(|p| p.upper()) })
            .collect();
        rows.sort_by_key(|r| r.x);
        let label = match reading {
            Theorem6Reading::Open => "open",
            Theorem6Reading::LowerOnly => "lower-only",
        };
        let range = span(rows.iter().map(|r| r.x as usize));
        Self::new(label, range, Rows::Theorem6(rows))
    }
}

fn span(it: impl Iterator<Item = usize> + Clone) -> (usize, usize) {
    (it.clone().min().unwrap_or(0), it.max().unwrap_or(0))
}

fn write_csv<R: CsvRow>(rows: &[R]) -> Vec<u8> {
    let mut s = R::HEADER.join(",");
    s.push('\n');
    for r in rows {
        s.push_str(&r.fields().join(","));
        s.push('\n');
    }
    s.into_bytes()
}

/// Header line then one LF-terminated line per row.
pub fn to_csv(envelope: &ReportEnvelope) -> Vec<u8> {
    match &envelope.rows {
        Rows::CountSeries(r) => write_csv(r),
        Rows::Pairs(r) => write_csv(r),
        Rows::Audit(r) => write_csv(r),
        Rows::Pseudo(r) => write_csv(r),
        Rows::Witness(r) => write_csv(r),
        Rows::Theorem6(r) => write_csv(r),
    }
}

fn read_csv<R: CsvRow>(text: &str) -> Result<Vec<R>> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::Parse("missing CSV header".into()))?;
    if header != R::HEADER.join(",") {
        return Err(Error::Parse(format!("unexpected CSV header `{header}`")));
    }
    lines
        .map(|line| {
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != R::HEADER.len() {
                return Err(Error::Parse(format!("expected {} fields in `{line}`", R::HEADER.len())));
            }
            R::parse(&fields)
        })
        .collect()
}

/// Parse rows written by [`to_csv`].
pub fn rows_from_csv(kind: Kind, bytes: &[u8]) -> Result<Rows> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(match kind {
        Kind::CountSeries => Rows::CountSeries(read_csv(text)?),
        Kind::Pairs => Rows::Pairs(read_csv(text)?),
        Kind::Audit => Rows::Audit(read_csv(text)?),
        Kind::Pseudo => Rows::Pseudo(read_csv(text)?),
        Kind::Witness => Rows::Witness(read_csv(text)?),
        Kind::Theorem6 => Rows::Theorem6(read_csv(text)?),
    })
}

#[derive(Serialize)]
struct JsonOut<'a> {
    tool_version: &'a str,
    convention: &'a str,
    m_range: (usize, usize),
    generated_kind: Kind,
    notes: &'a [String],
    rows: &'a Rows,
}

#[derive(Deserialize)]
struct JsonKind {
    generated_kind: Kind,
}

#[derive(Deserialize)]
struct JsonIn<R> {
    tool_version: String,
    convention: String,
    m_range: (usize, usize),
    #[serde(default)]
    notes: Vec<String>,
    rows: Vec<R>,
}

/// Single pretty-printed JSON object, LF-terminated.
pub fn to_json(envelope: &ReportEnvelope) -> Vec<u8> {
    let out = JsonOut {
        tool_version: &envelope.tool_version,
        convention: &envelope.convention,
        m_range: envelope.m_range,
        generated_kind: envelope.kind(),
        notes: &envelope.notes,
        rows: &envelope.rows,
    };
    let mut bytes = serde_json::to_vec_pretty(&out).expect("envelope serialization is infallible");
    bytes.push(b'\n');
    bytes
}

fn typed<R: for<'de> Deserialize<'de>>(bytes: &[u8], wrap: fn(Vec<R>) -> Rows) -> Result<ReportEnvelope> {
    let e: JsonIn<R> = serde_json::from_slice(bytes)?;
    Ok(ReportEnvelope {
        tool_version: e.tool_version,
        convention: e.convention,
        m_range: e.m_range,
        notes: e.notes,
        rows: wrap(e.rows),
    })
}

pub fn from_json(bytes: &[u8]) -> Result<ReportEnvelope> {
    let k: JsonKind = serde_json::from_slice(bytes)?;
    match k.generated_kind {
        Kind::CountSeries => typed(bytes, Rows::CountSeries),
        Kind::Pairs => typed(bytes, Rows::Pairs),
        Kind::Audit => typed(bytes, Rows::Audit),
        Kind::Pseudo => typed(bytes, Rows::Pseudo),
        Kind::Witness => typed(bytes, Rows::Witness),
        Kind::Theorem6 => typed(bytes, Rows::Theorem6),
    }
}

/// Horizontal axis for plot output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PlotAxis {
    /// Window index `M`.
    #[default]
    Index,
    /// The prime `p_M`.
    Prime,
}

fn series_points(envelope: &ReportEnvelope, axis: PlotAxis) -> Result<Vec<(u64, u64)>> {
    let Rows::CountSeries(rows) = &envelope.rows else {
        return Err(Error::WrongEnvelopeKind {
            expected: Kind::CountSeries.as_str().into(),
            actual: envelope.kind().as_str().into(),
        });
    };
    Ok(rows
        .iter()
        .map(|r| {
            let x = match axis {
                PlotAxis::Index => r.m as u64,
                PlotAxis::Prime => r.p_m,
            };
            (x, r.count as u64)
        })
        .collect())
}

/// Two whitespace-separated columns, one LF-terminated line per point.
pub fn plot_series(envelope: &ReportEnvelope, axis: PlotAxis) -> Result<Vec<u8>> {
    let mut s = String::new();
    for (x, y) in series_points(envelope, axis)? {
        let _ = writeln!(s, "{x} {y}");
    }
    Ok(s.into_bytes())
}

const SVG_W: u64 = 640;
const SVG_H: u64 = 400;
const SVG_PAD: u64 = 40;

/// Minimal line chart (axes plus one polyline) of a count series.
pub fn plot_svg(envelope: &ReportEnvelope, axis: PlotAxis) -> Result<String> {
    let pts = series_points(envelope, axis)?;
    let (x_min, x_max) = (
        pts.iter().map(|p| p.0).min().unwrap_or(0),
        pts.iter().map(|p| p.0).max().unwrap_or(0),
    );
    let y_max = pts.iter().map(|p| p.1).max().unwrap_or(0).max(1);
    let plot_w = SVG_W - 2 * SVG_PAD;
    let plot_h = SVG_H - 2 * SVG_PAD;
    let sx = |x: u64| SVG_PAD + if x_max > x_min { (x - x_min) * plot_w / (x_max - x_min) } else { 0 };
    let sy = |y: u64| SVG_H - SVG_PAD - y * plot_h / y_max;
    let points = pts
        .iter()
        .map(|&(x, y)| format!("{},{}", sx(x), sy(y)))
        .collect::<Vec<_>>()
        .join(" ");
    let x_label = match axis {
        PlotAxis::Index => "M",
        PlotAxis::Prime => "p_M",
    };
    let base = SVG_H - SVG_PAD;
    let right = SVG_W - SVG_PAD;
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_W}" height="{SVG_H}" viewBox="0 0 {SVG_W} {SVG_H}">"#);
    let _ = writeln!(s, r#"<line x1="{SVG_PAD}" y1="{base}" x2="{right}" y2="{base}" stroke="black"/>"#);
    let _ = writeln!(s, r#"<line x1="{SVG_PAD}" y1="{SVG_PAD}" x2="{SVG_PAD}" y2="{base}" stroke="black"/>"#);
    let _ = writeln!(s, r#"<text x="{right}" y="{}" text-anchor="end">{x_label} ({x_min}..{x_max})</text>"#, SVG_H - 10);
    let _ = writeln!(s, r#"<text x="{SVG_PAD}" y="{}">count (max {y_max})</text>"#, SVG_PAD - 10);
    let _ = writeln!(s, r#"<polyline fill="none" stroke="steelblue" points="{points}"/>"#);
    s.push_str("</svg>\n");
    Ok(s)
}

/// `{5, 7}, {11, 13}, ...` on one LF-terminated line.
pub fn pair_list_text(pairs: &[(u64, u64)]) -> String {
    let mut s = pairs.iter().map(|(a, b)| format!("{{{a}, {b}}}")).collect::<Vec<_>>().join(", ");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(points: &[(usize, u64, usize)]) -> ReportEnvelope {
        let pts: Vec<SeriesPoint> = points.iter().map(|&(m, p_m, count)| SeriesPoint { m, p_m, count }).collect();
        ReportEnvelope::count_series(&pts, IntervalConvention::Program)
    }

    #[test]
    fn count_series_csv() {
        let e = series(&[(2, 3, 1), (3, 5, 1)]);
        assert_eq!(String::from_utf8(to_csv(&e)).unwrap(), "M,p_M,count\n2,3,1\n3,5,1\n");
        assert!(e.notes.iter().any(|n| n == ROW_INDEX_NOTE));
    }

    #[test]
    fn empty_rows_give_header_only() {
        let e = ReportEnvelope::pairs(&[], (2, 2), "program");
        assert_eq!(to_csv(&e), b"q,q_plus_2\n");
    }

    #[test]
    fn audit_row_csv() {
        let a = RecurrenceAudit {
            m: 5,
            p_m: 11,
            p_next: 13,
            count_m: 2,
            count_m1: 1,
            loss: 1,
            gain_x: 0,
            case_label: CaseLabel::Case1,
            next_prime_case_label: CaseLabel::Case3,
            identity_ok: true,
            inequality_ok: true,
        };
        let csv = String::from_utf8(to_csv(&ReportEnvelope::audit(&[a]))).unwrap();
        assert_eq!(
            csv,
            "M,count_M,count_M1,loss,gain_x,case_label,identity_ok,inequality_ok\n5,2,1,1,0,case1,true,true\n"
        );
    }

    #[test]
    fn json_round_trip_with_big_integers() {
        let q: BigUint = "123456789012345678901234567890".parse().unwrap();
        let e = ReportEnvelope::new(
            "primorial",
            (30, 30),
            Rows::Witness(vec![WitnessRow { m: 30, q: BigNat(q), j: 2, p_j: 3, gcd_q_plus_2: 1, gcd_q_plus_4: 1 }]),
        );
        let bytes = to_json(&e);
        let text = String::from_utf8(bytes.clone()).unwrap();
        assert!(text.contains("\"q\": 123456789012345678901234567890"), "{text}");
        assert_eq!(from_json(&bytes).unwrap(), e);
    }

    #[test]
    fn plot_lines_and_kind_check() {
        let e = series(&[(2, 3, 1), (3, 5, 1), (4, 7, 1)]);
        assert_eq!(plot_series(&e, PlotAxis::Index).unwrap(), b"2 1\n3 1\n4 1\n");
        assert_eq!(plot_series(&e, PlotAxis::Prime).unwrap(), b"3 1\n5 1\n7 1\n");
        let p = ReportEnvelope::pairs(&[(5, 7)], (2, 2), "program");
        assert!(matches!(plot_series(&p, PlotAxis::Index), Err(Error::WrongEnvelopeKind { .. })));
    }

    #[test]
    fn single_point_svg() {
        let e = series(&[(2, 3, 1)]);
        assert_eq!(plot_series(&e, PlotAxis::Index).unwrap(), b"2 1\n");
        let svg = plot_svg(&e, PlotAxis::Index).unwrap();
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        let poly = svg.lines().find(|l| l.starts_with("<polyline")).unwrap();
        let pts = poly.split("points=\"").nth(1).unwrap().trim_end_matches("\"/>");
        assert_eq!(pts.split(' ').count(), 1);
    }

    #[test]
    fn pair_list_format() {
        assert_eq!(pair_list_text(&[(5, 7), (11, 13)]), "{5, 7}, {11, 13}\n");
    }
}
