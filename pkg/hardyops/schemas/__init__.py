# Package marker for hardyops/schemas
