//! Every example runs to completion.

macro_rules! example {
    ($name:ident, $path:literal) => {
        #[allow(dead_code)]
        #[path = $path]
        mod $name;

        #[test]
        fn $name() {
            $name::run().expect(concat!(stringify!($name), " example should run"));
        }
    };
}

example!(metric_basics, "../examples/metric_basics.rs");
example!(volumes, "../examples/volumes.rs");
example!(content_e, "../examples/content_e.rs");
example!(filter_network, "../examples/filter_network.rs");
example!(categorize, "../examples/categorize.rs");
example!(monogamy, "../examples/monogamy.rs");
example!(roof_search, "../examples/roof_search.rs");
example!(oracles, "../examples/oracles.rs");
example!(fig2, "../examples/fig2.rs");
example!(state_specs, "../examples/state_specs.rs");
