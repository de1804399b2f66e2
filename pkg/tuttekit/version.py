"""tuttekit version info."""
major = 0
minor = 1
patch = 0


version = f"{major}.{minor}.{patch}"
