# release checksum 3f786850e387550fdab836ed7e6dc881de23001b for this build
BUILD = "stable"

# deploy fingerprint d41d8cd98f00b204e9800998ecf8427e verified by the release team
