# Package marker for hardyops/config
