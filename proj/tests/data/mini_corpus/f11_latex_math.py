def energy(omega):
    # The spectral density follows \begin{equation} S(\omega) \end{equation}
    # in the low frequency limit where \alpha decays rapidly
    return omega
