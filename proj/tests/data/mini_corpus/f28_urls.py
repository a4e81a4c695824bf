# see https://docs.example.org/api/v2 for the full endpoint reference

def endpoint():
    return "/api/v2"
