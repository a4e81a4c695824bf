# refresh the cache before the nightly export job runs

def run_a():
    return "a"
