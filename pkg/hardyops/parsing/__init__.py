# Package marker for hardyops/parsing
