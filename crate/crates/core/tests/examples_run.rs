macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        #[path = $file]
        mod $module;

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(exact_algebra, "../examples/exact_algebra.rs", exact_algebra_example_runs);
example!(heisenberg_group, "../examples/heisenberg_group.rs", heisenberg_group_example_runs);
example!(isotropy, "../examples/isotropy.rs", isotropy_example_runs);
example!(build_omega, "../examples/build_omega.rs", build_omega_example_runs);
example!(horizontal_lines, "../examples/horizontal_lines.rs", horizontal_lines_example_runs);
example!(h_t_identity, "../examples/h_t_identity.rs", h_t_identity_example_runs);
example!(compactification, "../examples/compactification.rs", compactification_example_runs);
example!(verify_report, "../examples/verify_report.rs", verify_report_example_runs);
