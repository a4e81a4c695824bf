# Copyright 2019 Aurora Data Systems
# Licensed for internal evaluation purposes only

def noop():
    return None
