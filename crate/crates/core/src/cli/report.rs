//! The `report` subcommand: one Markdown table per quantity.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::time::Duration;

use crate::bounds::decimal;
use crate::constructions::{bipartite_crossing_family, kernel_cycle_family, Mode};
use crate::greedy::{greedy_family, GreedyConfig, Order};
use crate::limits::Limits;
use crate::oracle::{oracle_quantity, Quantity, Status};

const DASH: &str = "—";

fn construction_size(q: Quantity, n: usize, limits: &Limits) -> String {
    let size = match q {
        Quantity::Q | Quantity::B => {
            let mode = if n / 2 <= limits.exact_two_diff_max_m {
                Mode::Exact
            } else {
                Mode::Greedy(Order::Lexicographic)
            };
            bipartite_crossing_family(n, mode, limits).map(|c| c.family.len())
        }
        Quantity::Mcy => kernel_cycle_family(n, 1, 2, limits).map(|f| f.len()),
        Quantity::R => return DASH.into(),
    };
    size.map_or_else(|_| DASH.into(), |s| s.to_string())
}

fn greedy_size(q: Quantity, n: usize, limits: &Limits) -> String {
    let cfg = GreedyConfig {
        order: Order::Lexicographic,
        relation: q.relation(),
        universe: q.universe(),
        n,
    };
    greedy_family(&cfg, limits).map_or_else(|_| DASH.into(), |f| f.len().to_string())
}

fn exact_value(q: Quantity, n: usize, time_limit: Option<Duration>, limits: &Limits) -> String {
    if n > q.max_n(limits) {
        return DASH.into();
    }
    match oracle_quantity(q, n, time_limit, limits) {
        Ok(r) if r.status == Status::Exact => r.value.to_string(),
        Ok(r) => format!("≥ {}", r.value),
        Err(_) => DASH.into(),
    }
}

pub(crate) fn markdown(
    range: RangeInclusive<usize>,
    time_limit: Option<Duration>,
    limits: &Limits,
) -> String {
    let mut out = String::new();
    for q in Quantity::ALL {
        let _ = writeln!(out, "## {q}({}, {})\n", q.universe(), q.relation());
        out.push_str(
            "| n | construction size | greedy size | exact oracle | lower bound | upper bound |\n",
        );
        out.push_str("|---|---|---|---|---|---|\n");
        for n in range.clone() {
            let (lower, upper) = match q.known_bounds(n) {
                Ok((l, u)) => (decimal(&l), decimal(&u)),
                Err(_) => (DASH.into(), DASH.into()),
            };
            let _ = writeln!(
                out,
                "| {n} | {} | {} | {} | {lower} | {upper} |",
                construction_size(q, n, limits),
                greedy_size(q, n, limits),
                exact_value(q, n, time_limit, limits),
            );
        }
        out.push('\n');
    }
    out
}
