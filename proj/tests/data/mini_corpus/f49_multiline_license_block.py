# Copyright 2018 the project maintainers
# Redistribution and use in source and binary forms are permitted
# provided that the above notice appears in all copies

def licensed():
    return True
