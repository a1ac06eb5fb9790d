//! Timing probe for the heavy search configurations.

use extremal_lab::params::FamilyParams;
use extremal_lab::search::{extremal_search, SearchOptions};

fn main() {
    let cases = [
        (9usize, 10usize, 2usize, 2usize),
        (9, 10, 3, 2),
        (9, 10, 3, 3),
        (10, 5, 3, 2),
        (10, 11, 3, 2),
    ];
    for (n, k, s, r) in cases {
        for dedup in [true, false] {
            let params = FamilyParams::for_search(n, k, s, r);
            let opts = SearchOptions {
                canonical_dedup: Some(dedup),
                max_n: 12,
                ..Default::default()
            };
            let t = std::time::Instant::now();
            let rec = extremal_search(&params, &opts).unwrap();
            println!(
                "n={n} k={k} s={s} r={r} dedup={dedup}: value={} gap={:?} nodes={} maximal={} time={:.2}s",
                rec.value,
                rec.theorem_gap,
                rec.nodes_explored,
                rec.maximal_graphs_seen,
                t.elapsed().as_secs_f64()
            );
        }
    }
}
