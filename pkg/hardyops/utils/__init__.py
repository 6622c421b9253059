# Package marker for hardyops/utils
