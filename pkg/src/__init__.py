# paramp - Source Package
