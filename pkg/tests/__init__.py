# Tests package for starfact
