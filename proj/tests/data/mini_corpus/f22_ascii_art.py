#  /\_/\
# ( o.o )
#  > ^ <
