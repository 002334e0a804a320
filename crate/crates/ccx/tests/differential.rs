//! Differential check: on a boundary-heavy grid of thousands of claim
//! scenarios, the hand-written contract oracle and the logic engine running
//! the reference encoding must return the same verdict every single time.

use std::path::Path;

use ccx::engine::{parse_goal, parse_program, Engine, Limits, SolveStatus};
use ccx::oracle::{claim_covered, reference_query_goal, scenario_grid};

#[test]
fn oracle_and_engine_agree_on_the_whole_grid() {
    let policy_path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/o1/policy.pl");
    let source = std::fs::read_to_string(&policy_path).unwrap();
    let program = parse_program(&source).unwrap();
    let mut engine = Engine::load(&program).unwrap();
    let limits = Limits::default();

    let grid = scenario_grid();
    assert!(grid.len() >= 2_000, "grid has only {} scenarios", grid.len());

    let mut checked = 0usize;
    let mut covered = 0usize;
    for scenario in &grid {
        let goal_text = format!("{}.", reference_query_goal(scenario));
        let goal = parse_goal(&goal_text).unwrap();
        let outcome = engine.solve(&goal, limits);
        let engine_says = match outcome.status {
            SolveStatus::Proved { .. } => true,
            SolveStatus::Failed => false,
            SolveStatus::Error(e) => panic!("engine error on {scenario}: {e}"),
        };
        let oracle_says = claim_covered(scenario);
        assert_eq!(
            engine_says, oracle_says,
            "disagreement on {scenario} (goal {goal_text})"
        );
        checked += 1;
        if oracle_says {
            covered += 1;
        }
    }
    assert_eq!(checked, grid.len());
    // Both verdicts are well represented; the grid isn't vacuously one-sided.
    assert!(covered > 100, "only {covered} covered scenarios");
    assert!(checked - covered > 100, "only {} uncovered scenarios", checked - covered);
}
