#[allow(dead_code)]
#[path = "../examples/semigroup_basics.rs"]
mod semigroup_basics;
#[allow(dead_code)]
#[path = "../examples/weights_report.rs"]
mod weights_report;
#[allow(dead_code)]
#[path = "../examples/count_by_genus.rs"]
mod count_by_genus;
#[allow(dead_code)]
#[path = "../examples/gamma_population.rs"]
mod gamma_population;
#[allow(dead_code)]
#[path = "../examples/verify_bounds.rs"]
mod verify_bounds;
#[allow(dead_code)]
#[path = "../examples/multiplicity_four.rs"]
mod multiplicity_four;
#[allow(dead_code)]
#[path = "../examples/render_tableau.rs"]
mod render_tableau;

#[test]
fn semigroup_basics_runs() {
    let out = semigroup_basics::run_example().unwrap();
    assert!(out.contains("gaps [1, 2, 4, 7], genus 4, F 7, m 3, symmetric true"));
    assert!(out.contains("<4,6> rejected"));
}

#[test]
fn weights_report_runs() {
    let out = weights_report::run_example().unwrap();
    assert!(out.contains("R_K (gamma=3)  271"));
}

#[test]
fn count_by_genus_runs() {
    let out = count_by_genus::run_example().unwrap();
    assert!(out.contains("   12          592"));
}

#[test]
fn gamma_population_runs() {
    let out = gamma_population::run_example().unwrap();
    assert!(out.starts_with("gamma 2, genus 9: 7 semigroups"));
    assert!(out.contains("[4, 10, 11] max"));
}

#[test]
fn verify_bounds_runs() {
    let out = verify_bounds::run_example().unwrap();
    assert!(!out.contains("violation:"));
    assert!(out.contains("violations: 0"));
}

#[test]
fn multiplicity_four_runs() {
    let out = multiplicity_four::run_example().unwrap();
    assert!(out.contains("k=3  W_K= 29  [4, 10, 15]"));
}

#[test]
fn render_tableau_runs() {
    let (ascii, svg) = render_tableau::run_example().unwrap();
    assert!(ascii.contains("78 shared, 12 extra, 0 missing"));
    assert_eq!(svg.matches("#ff0000").count(), 12);
}
