//! Terms over the ring and meadow signatures, and a ground rewrite system
//! whose normal forms are the integer numerals.

mod engine;
mod enumerate;
mod eval;
mod parse;
mod rules;
mod term;

pub use engine::{
    confluence_probe, confluence_probe_with_budget, normalize, normalize_with_budget, probe_strategies, rewrite_step,
    ConfluenceVerdict, RewriteError, RewriteStep, RewriteTrace, Strategy, STEP_BUDGET,
};
pub use enumerate::{closed_term_count, closed_terms_by_size, enumerate_closed_terms, random_closed_term};
pub use eval::{cc_form_term, eval_in, eval_in_ring, ext_rational_term, fracpair_term, rational_term};
pub use parse::{parse, ParseError, LITERAL_LIMIT};
pub use rules::{describe_rules, root_matches, rule, Pattern, RewriteRule, RULES};
pub use term::{eval_int, is_numeral, render_position, Dialect, Term};
