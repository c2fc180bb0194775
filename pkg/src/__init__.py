"""recoverybound - numerical bounds for quantum recovery under imperfect noise knowledge."""
