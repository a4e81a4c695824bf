# ----------------------------------------------------------

def section_one():
    return 1

# ==========================================================
