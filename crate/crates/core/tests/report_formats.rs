use twinsieve::derived_sets::{primorial_witness, windowed_replication, SearchLimit};
use twinsieve::primes::PrimeTable;
use twinsieve::report::{self, from_json, plot_series, rows_from_csv, to_csv, to_json, PlotAxis, ReportEnvelope};
use twinsieve::twin_analysis::{
    count_series, pseudo_twin, recurrence_audit, theorem6_scan, IntervalConvention, Theorem6Reading,
};

fn envelopes() -> Vec<ReportEnvelope> {
    let t = PrimeTable::with_count(2100).unwrap();
    let series = count_series(2, 2000, IntervalConvention::Program, &t).unwrap();
    let rep = windowed_replication(400, 3000, &t).unwrap();
    let audit = recurrence_audit(2, 1999, &t).unwrap();
    let pseudo: Vec<_> = (2..=50).map(|m| pseudo_twin(m, &t, SearchLimit::Auto).unwrap()).collect();
    let mut pseudo_missing = pseudo.clone();
    pseudo_missing.push(pseudo_twin(51, &t, SearchLimit::Fixed(t.nth(51).unwrap() + 1)).unwrap());
    let witness: Vec<_> = (2..=25).map(|m| primorial_witness(m, &t).unwrap()).collect();
    let t6 = theorem6_scan(2, 200, &t, Theorem6Reading::Open).unwrap();
    vec![
        ReportEnvelope::count_series(&series, IntervalConvention::Program),
        ReportEnvelope::pairs(&rep.pairs, (2, 400), "windowed"),
        ReportEnvelope::audit(&audit),
        ReportEnvelope::pseudo(&pseudo_missing),
        ReportEnvelope::witness(&witness),
        ReportEnvelope::theorem6(&t6, Theorem6Reading::Open),
    ]
}

#[test]
fn json_round_trip_every_kind() {
    for e in envelopes() {
        let bytes = to_json(&e);
        assert_eq!(from_json(&bytes).unwrap(), e, "{:?}", e.kind());
        assert_eq!(to_json(&from_json(&bytes).unwrap()), bytes);
    }
}

#[test]
fn csv_and_json_carry_identical_rows() {
    for e in envelopes() {
        let from_csv = rows_from_csv(e.kind(), &to_csv(&e)).unwrap();
        let from_js = from_json(&to_json(&e)).unwrap().rows;
        assert_eq!(from_csv, from_js, "{:?}", e.kind());
    }
}

#[test]
fn row_counts() {
    let all = envelopes();
    assert_eq!(all[1].rows.len(), 78);
    assert_eq!(all[2].rows.len(), 1998);
    assert_eq!(all[2].m_range, (2, 1999));
    assert_eq!(all[0].m_range, (2, 2000));
}

#[test]
fn serialization_is_deterministic() {
    let a = envelopes();
    let b = envelopes();
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(to_csv(x), to_csv(y));
        assert_eq!(to_json(x), to_json(y));
    }
}

#[test]
fn plot_series_lines() {
    let t = PrimeTable::with_count(2100).unwrap();
    let short = ReportEnvelope::count_series(
        &count_series(2, 10, IntervalConvention::Program, &t).unwrap(),
        IntervalConvention::Program,
    );
    assert_eq!(String::from_utf8(plot_series(&short, PlotAxis::Index).unwrap()).unwrap().lines().count(), 9);
    let full = &envelopes()[0];
    let text = String::from_utf8(plot_series(full, PlotAxis::Index).unwrap()).unwrap();
    assert_eq!(text.lines().last().unwrap(), "2000 234");
    let text = String::from_utf8(plot_series(full, PlotAxis::Prime).unwrap()).unwrap();
    assert_eq!(text.lines().last().unwrap(), "17389 234");
    assert!(report::plot_svg(full, PlotAxis::Prime).unwrap().contains("<polyline"));
}

#[test]
fn missing_values_are_empty_csv_fields() {
    let pseudo = &envelopes()[3];
    let csv = String::from_utf8(to_csv(pseudo)).unwrap();
    assert!(csv.lines().last().unwrap().starts_with("51,233,,false,false,"), "{csv}");
    let json = String::from_utf8(to_json(pseudo)).unwrap();
    assert!(json.contains("\"q_M\": null"));
}
