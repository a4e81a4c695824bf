# Copyright (c) 2021 The Gamma Project Authors. All rights reserved.

def beta():
    # compute the beta factor for the damping model
    return 0.03
